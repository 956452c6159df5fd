"""
UlrichForge - Lattice Service
Intersection form, canonical class and Riemann-Roch on Num(F_e).
"""
from schemas.lattice import DivisorClass, SurfaceParams
from utils.errors import SurfaceMismatchError


def divisor(a: int, b: int, e: int) -> DivisorClass:
    return DivisorClass(a=a, b=b, e=e)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Bilinear extension of C^2 = -e, C.f = 1, f^2 = 0."""
    if d1.e != d2.e:
        raise SurfaceMismatchError(d1.e, d2.e)
    return -d1.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b


def canonical_class(e: int) -> DivisorClass:
    surface = SurfaceParams(e=e)
    return DivisorClass(a=-2, b=-(surface.e + 2), e=surface.e)


def euler_char(d: DivisorClass) -> int:
    """chi(O(D)) = (a+1)(b+1) - e*a(a+1)/2."""
    return (d.a + 1) * (d.b + 1) - d.e * d.a * (d.a + 1) // 2


def polarization(e: int, b: int) -> DivisorClass:
    """c_1(E_e) = 3C_e + b f, the polarization used throughout."""
    return DivisorClass(a=3, b=b, e=e)


def degree(e: int, b: int) -> int:
    """H^2 for H = (3, b): 6b - 9e."""
    h = polarization(e, b)
    return intersect(h, h)
