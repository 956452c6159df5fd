"""
UlrichForge - Command layer
One function per CLI subcommand / HTTP route. Each returns a pydantic model or
a plain dict, which both front ends render with canonical_json.
"""
from typing import List, Optional

from config import settings
from schemas.field import FieldSpec
from schemas.lattice import DivisorClass
from schemas.presentation import ScrollConfig
from schemas.scroll import ScrollClass
from services import moduli, scroll
from services.cohomology import line_bundle_cohomology
from services.presentation import build_presentation, k_range, sample_phi, validate_config
from services.verifier import line_search_report, verify_config
from utils.errors import ConfigError
from utils.seeding import make_rng


def resolve_field(text: Optional[str]) -> FieldSpec:
    return FieldSpec.parse(text or settings.ULRICH_DEFAULT_FIELD)


def _config(e: int, b: int, k: int, r: int) -> ScrollConfig:
    return validate_config(e, b, k, r).config


def cohomology(e: int, a: int, b: int) -> dict:
    t = line_bundle_cohomology(DivisorClass(a=a, b=b, e=e))
    return {"e": e, "a": a, "b": b, "h0": t.h0, "h1": t.h1, "h2": t.h2, "chi": t.chi}


def validate(e: int, b: int, k: int, r: int):
    return validate_config(e, b, k, r)


def presentation(e: int, b: int, k: int, r: int, seed: Optional[int] = None,
                 field: Optional[str] = None) -> dict:
    p = build_presentation(_config(e, b, k, r))
    out = {"presentation": p, "shape": p.shape}
    if seed is not None:
        out["phi"] = sample_phi(p, resolve_field(field), make_rng(seed), seed=seed).to_dict()
    return out


def verify(e: int, b: int, k: int, r: int, seed: Optional[int] = None, field: Optional[str] = None,
           trials: Optional[int] = None, with_ext: bool = True, with_scroll: bool = False):
    report = verify_config(_config(e, b, k, r), seed=seed, field=resolve_field(field),
                           trials=trials, with_ext=with_ext)
    if not with_scroll:
        return report
    return {"surface": report, "scroll": scroll.verify_scroll_bundle(report)}


def search_lines(e: int, b: int, box: Optional[int] = None):
    return line_search_report(e, b, box)


def moduli_dim(r: int, e: int, b: int, k: Optional[int] = None, with_ext: bool = False,
               seed: Optional[int] = None, field: Optional[str] = None):
    if k is None:
        # the Hom counts do not depend on k; any admissible one will do
        lo, hi = k_range(e, b)
        if lo > hi:
            validate_config(e, b, lo, r)
        k = lo
    field_spec = resolve_field(field) if with_ext else None
    return moduli.compare(_config(e, b, k, r), with_ext=with_ext, seed=seed, field=field_spec)


def scroll_slope(e: int, b: int, k: int, r: int):
    return scroll.slope_report(_config(e, b, k, r))


def scroll_check_a(e: int, t_max: Optional[int] = None, b_values: Optional[List[int]] = None):
    for b in b_values or []:
        lo, hi = k_range(e, b)
        if lo > hi:
            raise ConfigError("b_e \\geq 3e+2", {"e": e, "b": b})
    return scroll.verify_main_theorem_a(e, t_max=t_max, b_values=b_values)


def scroll_chow(e: int, b: int, k: int, x: tuple, y: tuple, z: tuple) -> dict:
    config = _config(e, b, k, 1)
    classes = [ScrollClass(m=m, L=DivisorClass(a=a, b=bb, e=e)) for m, a, bb in (x, y, z)]
    return {
        "e": e, "b": b, "k": k,
        "x": list(x), "y": list(y), "z": list(z),
        "value": scroll.triple_product(*classes, config),
    }
