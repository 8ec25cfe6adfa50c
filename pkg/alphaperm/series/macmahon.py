"""
Both master-theorem expansions:

    det(I - XA)^(-alpha)           = sum_n per_alpha(A[n]) x^n / n!
    det(I - alpha XA)^(-1/alpha)   = sum_n det_alpha(A[n]) x^n / n!
"""
from itertools import combinations
from typing import Any, Dict, List, Optional

from alphaperm.config.config import get_global_config
from alphaperm.config.model import MacMahonReport
from alphaperm.numeric.linalg import det_exact
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import Scalar, format_scalar, parse_scalar
from alphaperm.permanent.alpha import Alpha
from alphaperm.permanent.dilation import dilate
from alphaperm.permanent.multi_index import MultiIndex, indices_up_to
from alphaperm.permanent.permanent import det_alpha, per_alpha
from alphaperm.series.sparse_poly import SparsePoly
from alphaperm.series.truncated import TruncatedSeries, series_pow
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.enumeration import BoundExceededError
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.exceptions.series import DegenerateAlphaError
from alphaperm.utils.logger import Logger

logger = Logger.get_logger("series")

Coefficients = Dict[MultiIndex, Scalar]


def det_I_minus_XA(A: RMatrix, bound: Optional[int] = None) -> SparsePoly:
    """
    det(I - XA) = sum_S (-1)^|S| det(A_S) prod_{i in S} x_i over all
    principal submatrices A_S.
    """
    if not A.is_square:
        raise ShapeError(f"det(I - XA) needs a square matrix, got {A.shape}", precondition="square matrix")
    m = A.rows
    bound = get_global_config().enumeration.minor_bound if bound is None else bound
    if m > bound:
        raise BoundExceededError(f"2^{m} principal minors", size=m, bound=bound)
    terms = {}
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            minor = det_exact(A.principal_submatrix(subset)) if subset else 1
            if minor != 0:
                exp = MultiIndex(1 if i in subset else 0 for i in range(m))
                terms[exp] = minor if size % 2 == 0 else -minor
    return SparsePoly(m, terms)


def _dense(series: TruncatedSeries) -> Coefficients:
    """Every index up to D, zeros included, graded-lex"""
    return {n: series.coefficient(n) for n in indices_up_to(series.nvars, series.max_degree)}


def macmahon_per_coeffs(A: RMatrix, alpha, max_degree: Optional[int] = None) -> Coefficients:
    """Coefficients of det(I - XA)^(-alpha) up to total degree D"""
    alpha = Alpha.of(alpha)
    D = get_global_config().series.max_degree if max_degree is None else max_degree
    f = TruncatedSeries.from_poly(det_I_minus_XA(A), D)
    with logger.timed("macmahon_per_coeffs", m=A.rows, degree=D, alpha=str(alpha)):
        return _dense(series_pow(f, -alpha.value))


def macmahon_det_coeffs(A: RMatrix, alpha, max_degree: Optional[int] = None) -> Coefficients:
    """Coefficients of det(I - alpha XA)^(-1/alpha) up to total degree D; alpha != 0"""
    alpha = Alpha.of(alpha)
    if alpha.value == 0:
        raise DegenerateAlphaError("det(I - alpha XA)^(-1/alpha) is undefined at alpha = 0")
    D = get_global_config().series.max_degree if max_degree is None else max_degree
    f = TruncatedSeries.from_poly(det_I_minus_XA(A.scale(alpha.value)), D)
    with logger.timed("macmahon_det_coeffs", m=A.rows, degree=D, alpha=str(alpha)):
        return _dense(series_pow(f, -alpha.beta))


def coefficients_to_json(coefficients: Coefficients) -> List[Dict[str, Any]]:
    return [{"n": list(n), "value": format_scalar(coefficients[n])}
            for n in sorted(coefficients, key=MultiIndex.graded_key)]


def coefficients_from_json(data: List[Dict[str, Any]]) -> Coefficients:
    if not isinstance(data, list):
        raise ParseError("coefficients must be a list of {'n', 'value'}", data)
    out = {}
    for item in data:
        if not isinstance(item, dict) or "n" not in item or "value" not in item:
            raise ParseError("each coefficient needs 'n' and 'value'", item)
        out[MultiIndex(item["n"])] = parse_scalar(item["value"])
    return out


def macmahon_verify(A: RMatrix, alpha, max_degree: Optional[int] = None, identity: str = "per") -> MacMahonReport:
    """
    Compare every series coefficient with per_alpha(A[n]) / n! (or det_alpha)
    computed by enumeration on the dilated matrix.
    """
    alpha = Alpha.of(alpha)
    D = get_global_config().series.max_degree if max_degree is None else max_degree
    if identity == "per":
        coefficients, direct = macmahon_per_coeffs(A, alpha, D), per_alpha
    elif identity == "det":
        coefficients, direct = macmahon_det_coeffs(A, alpha, D), det_alpha
    else:
        raise ParseError("identity must be 'per' or 'det'", identity)
    report = MacMahonReport(identity=identity, alpha=alpha.value, degree=D)
    for n, value in coefficients.items():
        expected = direct(dilate(A, n), alpha) / n.factorial
        report.trials += 1
        if value != expected:
            report.record({"n": list(n), "series": value, "direct": expected})
    logger.info("macmahon verification finished",
                context={"identity": identity, "checked": report.trials, "mismatches": report.violations})
    return report
