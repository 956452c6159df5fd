"""
UlrichForge - Presentation Service
Validates scroll configurations and builds the cokernel presentations of the
rank-r Ulrich bundles H_r on F_e.
"""
import logging
from typing import List, Optional

import numpy as np

from schemas.field import FieldSpec
from schemas.lattice import DivisorClass
from schemas.presentation import ConfigValidation, Presentation, ScrollConfig
from services import lattice
from services.cox import Form, evaluate, sample_form
from services.xla import ExactMatrix
from utils.errors import ConfigError, InternalConsistencyError, UnsupportedError

logger = logging.getLogger(__name__)

K_RANGE = "b_e-e< k_e< 2b_e-4e"
B_BOUND = "b_e \\geq 3e+2"


def k_range(e: int, b: int) -> tuple:
    """Inclusive range of admissible k (empty when lo > hi)."""
    return (b - e + 1, 2 * b - 4 * e - 1)


def validate_config(e: int, b: int, k: int, r: int) -> ConfigValidation:
    values = {"e": e, "b": b, "k": k, "r": r}
    if e < 0:
        raise ConfigError("e \\geq 0", values)
    if r < 1:
        raise ConfigError("r \\geq 1", values)
    if not (b - e < k < 2 * b - 4 * e):
        msg = None
        if b < 3 * e + 2:
            msg = f"violates {K_RANGE}: the k-range is empty since {B_BOUND} fails (b={b}, e={e})"
        raise ConfigError(K_RANGE, values, msg)
    config = ScrollConfig(e=e, b=b, k=k, r=r)
    return ConfigValidation(
        config=config,
        a_class=config.a_class,
        b_class=config.b_class,
        k_range=k_range(e, b),
    )


def c1_target(config: ScrollConfig) -> DivisorClass:
    r, e, b = config.r, config.e, config.b
    if r < 2:
        raise UnsupportedError("rank 1 is handled by the line-bundle search")
    if r % 2 == 0:
        h = r // 2
        return DivisorClass(a=3 * r + h, b=r * b + h * (b - e - 2), e=e)
    h = (r - 3) // 2
    return DivisorClass(a=3 * (r + 1) + h, b=(r + 1) * b - 3 + h * (b - e - 2), e=e)


def _closed_forms(r: int, e: int, b: int) -> tuple:
    if r % 2:
        return (((b - 2 * e + 1) * r - b + 3) // 2, (r - 1) * b // 2 - e * r, 3 * (r + 1) // 2)
    return ((b - 2 * e + 1) * r // 2, (b - 2 * e) * r // 2, 3 * r // 2)


def _e2(classes: List[DivisorClass]) -> int:
    """Second elementary symmetric function of the classes under intersection."""
    total = 0
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            total += lattice.intersect(classes[i], classes[j])
    return total


def whitney_c2(block_a: DivisorClass, gamma: int, b_degrees: List[DivisorClass], c1: DivisorClass) -> int:
    """c_2(H) = c_2(B) - c_2(A) - c_1(A).c_1(H)."""
    c2_a = gamma * (gamma - 1) // 2 * lattice.intersect(block_a, block_a)
    c2_b = _e2(b_degrees)
    return c2_b - c2_a - lattice.intersect(gamma * block_a, c1)


def build_presentation(config: ScrollConfig) -> Presentation:
    r, e, b = config.r, config.e, config.b
    validate_config(e, b, config.k, r)
    c1 = c1_target(config)
    alpha, beta = c1.a, c1.b
    gamma = alpha + beta - r * (2 + b) - e * (alpha - 3 * r)
    delta = beta - r * (b - 1) - e * (alpha - 3 * r)
    tau = alpha - 2 * r
    closed = _closed_forms(r, e, b)
    if (gamma, delta, tau) != closed:
        raise InternalConsistencyError(
            f"coefficient routes disagree at {config}: general={(gamma, delta, tau)} closed={closed}"
        )
    if delta + tau - gamma != r:
        raise InternalConsistencyError(f"delta+tau-gamma={delta + tau - gamma} != r={r}")
    block_a = DivisorClass(a=2, b=b - e - 1, e=e)
    b1 = DivisorClass(a=2, b=b - e, e=e)
    b2 = DivisorClass(a=3, b=b - 1, e=e)
    b_degrees = [b1] * delta + [b2] * tau
    return Presentation(
        config=config,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        delta=delta,
        tau=tau,
        block_a=block_a,
        block_b=[(b1, delta), (b2, tau)],
        c2=whitney_c2(block_a, gamma, b_degrees, c1),
    )


class FormMatrix:
    """A (delta+tau) x gamma matrix of forms: the morphism phi: A -> B."""

    def __init__(self, presentation: Presentation, entries: List[List[Form]],
                 field: FieldSpec, seed: Optional[int] = None):
        rows, cols = presentation.shape
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError(f"entries must form a {rows}x{cols} matrix")
        for i, deg in enumerate(presentation.b_degrees):
            expected = deg - presentation.block_a
            for form in entries[i]:
                if form.degree != expected:
                    raise ValueError(f"row {i} entries must have degree {expected.pair()}")
        self.presentation = presentation
        self.entries = entries
        self.field = field
        self.seed = seed

    @classmethod
    def zero(cls, presentation: Presentation, field: FieldSpec) -> "FormMatrix":
        a = presentation.block_a
        entries = [[Form.zero(deg - a, field) for _ in range(presentation.gamma)]
                   for deg in presentation.b_degrees]
        return cls(presentation, entries, field, seed=None)

    @property
    def shape(self) -> tuple:
        return self.presentation.shape

    def entry_degree(self, i: int) -> DivisorClass:
        return self.presentation.b_degrees[i] - self.presentation.block_a

    def at_point(self, point) -> ExactMatrix:
        """The scalar matrix phi(point)."""
        return ExactMatrix.from_rows(
            [[evaluate(f, point) for f in row] for row in self.entries], self.field
        )

    def to_dict(self) -> dict:
        rows, cols = self.shape
        return {"rows": rows, "cols": cols, "field": self.field.tag(), "seed": self.seed}


def sample_phi(presentation: Presentation, field: FieldSpec, rng: np.random.Generator,
               seed: Optional[int] = None) -> FormMatrix:
    """Top delta rows have degree (0,1) entries, bottom tau rows degree (1,e)."""
    entries = []
    for deg in presentation.b_degrees:
        d = deg - presentation.block_a
        entries.append([sample_form(d, field, rng) for _ in range(presentation.gamma)])
    logger.debug("[PRESENTATION] sampled phi %sx%s over %s", *presentation.shape, field.tag())
    return FormMatrix(presentation, entries, field, seed=seed)
