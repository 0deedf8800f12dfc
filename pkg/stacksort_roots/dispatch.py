"""
Maps certify targets and identity names onto the functions that check one grid point. Every
handler is a module level function taking plain values and returning a JSON friendly dict with a
`passed` flag, so that grids can be spread over a process pool.
"""
import itertools
import logging
from typing import Any, Callable, Dict, List, Sequence, Tuple

from stacksort_roots.algebra.pipeline import theorem2_pipeline
from stacksort_roots.algebra.special import (JacobiParams, verify_eq2_consistency, verify_jacobi_zeros,
                                             verify_narayana_hypergeometric, verify_narayana_jacobi)
from stacksort_roots.algebra.sturm import certify, strictly_interlaces
from stacksort_roots.algebra.transforms import (is_n_sequence, post_lemma_sequence, verify_lemma2_identity,
                                                verify_lemma2_zeros, verify_post_lemma_identity)
from stacksort_roots.combinatorics.descents import descent_polynomial, w2_closed, w2_closed_binomial
from stacksort_roots.model.enums import CertifyTarget, CountingMethod, IdentityName
from stacksort_roots.model.exception import PipelineStageError
from stacksort_roots.utilities.conversion import rational_to_str
from stacksort_roots.utilities.exact import to_rational

_LOGGER = logging.getLogger(__name__)

Handler = Callable[..., Dict[str, Any]]
Job = Tuple[Handler, List[Tuple]]


# Certify targets

def certify_narayana(n: int) -> Dict[str, Any]:
    poly = descent_polynomial(n, 1, CountingMethod.CLOSED_FORM)
    cert = certify(poly)
    return {"n": n, "polynomial": poly.to_dict(), "certificate": cert.to_dict(),
            "passed": cert.is_real_rooted and cert.is_squarefree}


def certify_w2(n: int) -> Dict[str, Any]:
    poly = descent_polynomial(n, 2, CountingMethod.CLOSED_FORM)
    cert = certify(poly)
    return {"n": n, "polynomial": poly.to_dict(), "certificate": cert.to_dict(), "passed": cert.is_real_rooted}


def certify_pipeline(n: int) -> Dict[str, Any]:
    try:
        report = theorem2_pipeline(n)
    except PipelineStageError as e:
        return {"n": n, "failed_stage": e.stage, "report": e.report.to_dict() if e.report else None,
                "passed": False}
    return {"n": n, "report": report.to_dict(), "passed": True}


def certify_interlacing_narayana(n: int) -> Dict[str, Any]:
    p = descent_polynomial(n, 1, CountingMethod.CLOSED_FORM)
    q = descent_polynomial(n + 1, 1, CountingMethod.CLOSED_FORM)
    res = strictly_interlaces(p, q)
    return {"n": n, "p": p.to_dict(), "q": q.to_dict(), "interlaces": res, "passed": res}


def certify_post_lemma_sequence(n: int) -> Dict[str, Any]:
    g = post_lemma_sequence(n)
    verdict = is_n_sequence(g, n)
    entry = verdict.to_dict()
    entry["sequence"] = g.to_dict()
    entry["passed"] = verdict.holds
    return entry


def certify_lemma2_zeros(n: int, r: str) -> Dict[str, Any]:
    res = verify_lemma2_zeros(n, to_rational(r))
    return {"n": n, "r": r, "zeros_in_unit_interval": res, "passed": res}


# Identities

def identity_lemma2(n: int, r: str) -> Dict[str, Any]:
    res = verify_lemma2_identity(n, to_rational(r))
    return {"n": n, "r": r, "passed": res}


def identity_post_lemma(n: int) -> Dict[str, Any]:
    return {"n": n, "passed": verify_post_lemma_identity(n)}


def identity_jacobi_eq2(n: int, alpha: str, beta: str) -> Dict[str, Any]:
    p = JacobiParams(n, to_rational(alpha), to_rational(beta))
    entry = p.to_dict()
    entry["consistent"] = verify_eq2_consistency(p)
    passed = entry["consistent"]
    # Zeros are only located for the orthogonal range alpha, beta > -1
    if p.alpha > -1 and p.beta > -1:
        entry["zeros_inside"] = verify_jacobi_zeros(p)
        passed = passed and entry["zeros_inside"]
    entry["passed"] = passed
    return entry


def identity_narayana_jacobi(n: int) -> Dict[str, Any]:
    return {"n": n, "passed": verify_narayana_jacobi(n)}


def identity_narayana_hypergeometric(n: int) -> Dict[str, Any]:
    return {"n": n, "passed": verify_narayana_hypergeometric(n)}


def identity_w2_forms(n: int) -> Dict[str, Any]:
    mismatches = [k for k in range(n) if w2_closed(n, k) != w2_closed_binomial(n, k)]
    return {"n": n, "row": [w2_closed(n, k) for k in range(n)], "mismatches": mismatches, "passed": not mismatches}


_TARGET_MATRIX = {
    CertifyTarget.NARAYANA: certify_narayana,
    CertifyTarget.W2: certify_w2,
    CertifyTarget.PIPELINE: certify_pipeline,
    CertifyTarget.INTERLACING_NARAYANA: certify_interlacing_narayana,
    CertifyTarget.POST_LEMMA_SEQUENCE: certify_post_lemma_sequence,
    CertifyTarget.LEMMA2_ZEROS: certify_lemma2_zeros
}

_IDENTITY_MATRIX = {
    IdentityName.LEMMA2: identity_lemma2,
    IdentityName.POST_LEMMA: identity_post_lemma,
    IdentityName.JACOBI_EQ2: identity_jacobi_eq2,
    IdentityName.NARAYANA_JACOBI: identity_narayana_jacobi,
    IdentityName.NARAYANA_HYPERGEOMETRIC: identity_narayana_hypergeometric,
    IdentityName.W2_FORMS: identity_w2_forms
}

# Handlers that take an r grid on top of n
_R_GRID = {CertifyTarget.LEMMA2_ZEROS, IdentityName.LEMMA2}


def _strings(values: Sequence) -> List[str]:
    return [rational_to_str(to_rational(v)) for v in values]


def certify_job(target: CertifyTarget, ns: Sequence[int], rs: Sequence = ()) -> Job:
    """
    Returns the handler for a certify target with its parameter tuples, ordered by n (then r).
    """
    handler = _TARGET_MATRIX[target]
    if target in _R_GRID:
        return handler, [(n, r) for n in ns for r in _strings(rs)]
    return handler, [(n,) for n in ns]


def identity_job(which: IdentityName,
                 ns: Sequence[int],
                 rs: Sequence = (),
                 alphas: Sequence = (),
                 betas: Sequence = ()) -> Job:
    """
    Returns the handler for an identity with its parameter tuples, ordered by n, then r or (alpha, beta).
    """
    handler = _IDENTITY_MATRIX[which]
    if which in _R_GRID:
        return handler, [(n, r) for n in ns for r in _strings(rs)]
    if which == IdentityName.JACOBI_EQ2:
        return handler, [(n, a, b) for n in ns for a, b in itertools.product(_strings(alphas), _strings(betas))]
    return handler, [(n,) for n in ns]
