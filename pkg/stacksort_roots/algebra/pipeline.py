"""
Replays the real-rootedness argument for W_{n,2}(x) as a chain of certified computations:

1. A(x) = sum_k binom(2n, 2k+1) x^k, real-rooted by stride extraction from x(1+x)^(2n);
2. B = binom(n+k, n-1) applied to A, which equals the reversal of binom(2n-k-1, n-1) applied to A;
3. D = binom(2n-k-1, n-1) applied to B, divided by n^2 binom(2n, n);
4. D is the closed-form descent polynomial W_{n,2}(x).

Every stage polynomial is certified real-rooted with a Sturm count.
"""
import logging
from typing import List, Optional

from stacksort_roots.algebra.polynomial import RationalPoly
from stacksort_roots.algebra.sturm import certify
from stacksort_roots.algebra.transforms import (apply_sequence, binomial_shift_sequence, odd_binomial_poly,
                                                post_lemma_sequence)
from stacksort_roots.combinatorics.descents import descent_polynomial
from stacksort_roots.model.certificate import RootCertificate
from stacksort_roots.model.enums import CountingMethod
from stacksort_roots.model.exception import PipelineStageError
from stacksort_roots.model.shared import BaseDictPayload
from stacksort_roots.utilities.exact import binomial

_LOGGER = logging.getLogger(__name__)

STAGE_ODD_BINOMIAL = "odd_binomial"
STAGE_BINOMIAL_SHIFT = "binomial_shift"
STAGE_NORMALIZED = "normalized"
STAGE_DESCENT_POLYNOMIAL = "descent_polynomial"


class PipelineStage(BaseDictPayload):
    _payload_fields = ('name', 'polynomial', 'certificate')

    def __init__(self, name: str, polynomial: RationalPoly, certificate: RootCertificate, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.name = name
        self.polynomial = polynomial
        self.certificate = certificate


class PipelineReport(BaseDictPayload):
    """
    Stages completed so far. `final` is set once every stage has passed.
    """
    _payload_fields = ('n', 'stages', 'final')

    def __init__(self, n: int, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.n = n
        self.stages: List[PipelineStage] = []
        self.final: Optional[RationalPoly] = None

    def stage(self, name: str) -> PipelineStage:
        for s in self.stages:
            if s.name == name:
                return s
        raise KeyError(name)

    @property
    def completed(self) -> bool:
        return self.final is not None


def _certified_stage(report: PipelineReport, name: str, poly: RationalPoly) -> PipelineStage:
    cert = certify(poly)
    stage = PipelineStage(name, poly, cert)
    report.stages.append(stage)
    if not cert.is_real_rooted:
        _LOGGER.error(f"Stage {name} of the W_{{{report.n},2}} pipeline is not real-rooted: {cert}")
        raise PipelineStageError(name, f"{poly} is not real-rooted ({cert})", report)
    _LOGGER.debug(f"Stage {name}: {poly} certified {cert}")
    return stage


def theorem2_pipeline(n: int) -> PipelineReport:
    """
    Runs the four stages for a given n and returns the report with every intermediate polynomial and
    certificate. The sequences are the order n-1 ones, matching the degree of A.

    :param n: permutation length, at least 1

    :raises PipelineStageError: with the failing stage name and the partial report
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    report = PipelineReport(n)

    a = odd_binomial_poly(n)
    _certified_stage(report, STAGE_ODD_BINOMIAL, a)

    post = post_lemma_sequence(n, order=n - 1)
    b = apply_sequence(binomial_shift_sequence(n), a)
    reversed_post = apply_sequence(post, a).reverse(n - 1)
    if b != reversed_post:
        _LOGGER.error(f"Binomial shift {b} differs from the reversed image {reversed_post}")
        raise PipelineStageError(STAGE_BINOMIAL_SHIFT, f"{b} != {reversed_post}", report)
    _certified_stage(report, STAGE_BINOMIAL_SHIFT, b)

    d = apply_sequence(post, b).scale(1 / (n * n * binomial(2 * n, n)))
    _certified_stage(report, STAGE_NORMALIZED, d)

    w = descent_polynomial(n, 2, CountingMethod.CLOSED_FORM)
    if d != w:
        _LOGGER.error(f"Normalized polynomial {d} differs from W_{{{n},2}}(x) = {w}")
        raise PipelineStageError(STAGE_DESCENT_POLYNOMIAL, f"{d} != {w}", report)
    _certified_stage(report, STAGE_DESCENT_POLYNOMIAL, w)

    report.final = w
    _LOGGER.info(f"W_{{{n},2}}(x) = {w} certified real-rooted through {len(report.stages)} stages")
    return report
