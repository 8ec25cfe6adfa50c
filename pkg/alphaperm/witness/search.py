"""
Construction of PSD matrices with a negative alpha-determinant.

For a positive non-member alpha with beta = 1/alpha outside R(m) (or C(m)),
a spanning rank-one frame v_1..v_n of F^m and weights y > 0 give
A = sum y_i v_i v_i^* and the Gram matrix G_ij = v_i^* A^-1 v_j. Then

    det(A - sum x_i v_i v_i^*) / det(A) = det(I - XG)

and det(I - XG)^(-beta) = sum_n per_beta(G[n]) x^n / n! is not coefficientwise
nonnegative. The first negative coefficient (graded-lex) gives n with
det_alpha(G[n]) = alpha^|n| per_beta(G[n]) < 0.

Above the degree budget each attempt evaluates single coefficients along
concentrated indices n ~ N (y_i G_ii), one box {mu <= n} at a time.
"""
import json
from fractions import Fraction
from math import floor, prod
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from alphaperm.config.config import get_global_config
from alphaperm.config.model import WitnessExhaustion
from alphaperm.core.base_report import to_jsonable
from alphaperm.enums.field_e import ScalarField
from alphaperm.enums.verification_e import VerificationStatus
from alphaperm.numeric.linalg import det_exact, inverse_exact, is_psd_exact
from alphaperm.numeric.matrix import RMatrix, outer
from alphaperm.numeric.scalar import conjugate, parse_rational, parse_scalar, real_if_possible
from alphaperm.permanent.alpha import Alpha
from alphaperm.permanent.dilation import dilate
from alphaperm.permanent.multi_index import MultiIndex
from alphaperm.permanent.permanent import det_alpha, per_alpha
from alphaperm.series.macmahon import det_I_minus_XA
from alphaperm.series.sparse_poly import SparsePoly, polynomial_det
from alphaperm.series.truncated import TruncatedSeries, box_pow_coefficient, iter_pow_layers
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.matrix import SingularMatrixError
from alphaperm.utils.exceptions.witness import FrameError, WitnessError
from alphaperm.utils.logger import Logger
from alphaperm.utils.sampling import make_rng, random_positive_vector
from alphaperm.witness.frame import Vector, spanning_rank_one_frame
from alphaperm.witness.sets import minimal_frame_dimension

logger = Logger.get_logger("witness")


def _structure(field: ScalarField) -> Dict[str, bool]:
    return {"symmetric": True} if field == ScalarField.REAL else {"hermitian": True}


def _check_weights(frame: Sequence[Vector], y: Sequence[Any]) -> List[Fraction]:
    y = [parse_rational(c) for c in y]
    if len(y) != len(frame):
        raise FrameError(f"{len(y)} weights for a frame of {len(frame)} vectors")
    if any(c <= 0 for c in y):
        raise FrameError("weights must be strictly positive")
    return y


def frame_matrix(frame: Sequence[Vector], y: Sequence[Any], field=ScalarField.REAL) -> RMatrix:
    """A = sum y_i v_i v_i^*"""
    field = ScalarField(field)
    y = _check_weights(frame, y)
    A = outer(frame[0], frame[0]).scale(y[0])
    for v, weight in zip(frame[1:], y[1:]):
        A = A + outer(v, v).scale(weight)
    return RMatrix([[real_if_possible(c) for c in row] for row in A.entries], **_structure(field))


def witness_gram(m: int, field=ScalarField.REAL, y: Optional[Sequence[Any]] = None,
                 frame: Optional[Sequence[Vector]] = None) -> RMatrix:
    """
    G_ij = v_i^* A^-1 v_j: the Gram matrix of the vectors A^(-1/2) v_i,
    computed without the square root.
    """
    field = ScalarField(field)
    frame = spanning_rank_one_frame(m, field) if frame is None else frame
    y = [Fraction(1)] * len(frame) if y is None else y
    try:
        A_inv = inverse_exact(frame_matrix(frame, y, field))
    except SingularMatrixError:
        raise FrameError("sum of weighted outer products is singular", m=m)
    images = [[sum((A_inv[a, b] * v[b] for b in range(m)), Fraction(0)) for a in range(m)] for v in frame]
    n = len(frame)
    rows = [[real_if_possible(sum((conjugate(frame[i][a]) * images[j][a] for a in range(m)), Fraction(0)))
             for j in range(n)] for i in range(n)]
    return RMatrix(rows, **_structure(field))


def witness_polynomial(frame: Sequence[Vector], y: Sequence[Any], field=ScalarField.REAL) -> SparsePoly:
    """det(A - sum x_i v_i v_i^*) / det(A), a polynomial in n = len(frame) variables"""
    A = frame_matrix(frame, y, field)
    m = A.rows
    entries = []
    for a in range(m):
        row = []
        for b in range(m):
            linear = [-(v[a] * conjugate(v[b])) for v in frame]
            row.append(SparsePoly.linear(linear, A[a, b]))
        entries.append(row)
    P = polynomial_det(entries)
    if P.is_zero:
        raise FrameError("weighted frame matrix is singular")
    return P.scale(1 / real_if_possible(det_exact(A)))


class Witness(BaseModel):
    """A PSD matrix G[n] with det_alpha(G[n]) < 0, with its construction data"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: Fraction
    field: ScalarField
    m: int
    frame: List[List[Any]]
    y: List[Fraction]
    gram: RMatrix
    n_index: MultiIndex
    dilated: RMatrix
    value: Fraction
    series_coefficient: Fraction
    naive_value: Optional[Fraction] = None
    verification: VerificationStatus
    attempt: int = 0
    max_degree: int
    seed: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": to_jsonable(self.alpha),
            "field": self.field.value,
            "m": self.m,
            "frame": to_jsonable(self.frame),
            "y": to_jsonable(self.y),
            "gram": self.gram.to_dict(),
            "n_index": list(self.n_index),
            "dilated": self.dilated.to_dict(),
            "det_alpha_value": to_jsonable(self.value),
            "series_coefficient": to_jsonable(self.series_coefficient),
            "verification": {
                "status": self.verification.value,
                "series": to_jsonable(self.value),
                "naive": to_jsonable(self.naive_value),
            },
            "attempt": self.attempt,
            "max_degree": self.max_degree,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Witness':
        try:
            field = ScalarField(data["field"])
            verification = data["verification"]
            naive = verification.get("naive")
            return cls(
                alpha=parse_rational(data["alpha"]),
                field=field,
                m=data["m"],
                frame=[[parse_scalar(c) for c in v] for v in data["frame"]],
                y=[parse_rational(c) for c in data["y"]],
                gram=RMatrix.from_dict(data["gram"], **_structure(field)),
                n_index=MultiIndex(data["n_index"]),
                dilated=RMatrix.from_dict(data["dilated"], **_structure(field)),
                value=parse_rational(data["det_alpha_value"]),
                series_coefficient=parse_rational(data["series_coefficient"]),
                naive_value=None if naive is None else parse_rational(naive),
                verification=VerificationStatus(verification["status"]),
                attempt=data.get("attempt", 0),
                max_degree=data["max_degree"],
                seed=data.get("seed", 0),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed witness: {e}", data)


def check_witness(witness: Witness, bound: Optional[int] = None) -> None:
    """Re-derive G[n] and its alpha-determinant from the stored data"""
    if dilate(witness.gram, witness.n_index) != witness.dilated:
        raise WitnessError("stored dilation does not match gram[n]", alpha=witness.alpha)
    if not is_psd_exact(witness.gram) or not is_psd_exact(witness.dilated):
        raise WitnessError("witness matrix is not PSD", alpha=witness.alpha)
    if witness.value >= 0:
        raise WitnessError(f"witness value {witness.value} is not negative", alpha=witness.alpha)
    if witness.verification == VerificationStatus.BOTH:
        if det_alpha(witness.dilated, witness.alpha, bound) != witness.value:
            raise WitnessError("recomputed alpha-determinant differs", alpha=witness.alpha)


def save_witness(witness: Witness, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_witness(witness))
    return path


def dump_witness(witness: Witness) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(witness.to_dict(), indent=2, sort_keys=True) + "\n"


def load_witness(path: Union[str, Path], verify: bool = True) -> Witness:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid witness JSON: {e}", str(path))
    witness = Witness.from_dict(data)
    if verify:
        check_witness(witness, bound=max(witness.n_index.total, 1))
    return witness


def _first_negative(series: TruncatedSeries, beta: Fraction) -> Optional[Tuple[MultiIndex, Fraction]]:
    for k, layer in iter_pow_layers(series, -beta):
        if k == 0:
            continue
        for n in sorted(layer, key=MultiIndex.graded_key):
            coefficient = real_if_possible(layer[n])
            if coefficient < 0:
                return n, coefficient
    return None


def concentrated_indices(G: RMatrix, y: Sequence[Fraction], max_multiple: int, max_degree: int = 0,
                         box_limit: Optional[int] = None) -> Iterator[MultiIndex]:
    """
    n = round(N w / min w) for N = 1..max_multiple with leverage weights
    w_i = y_i G_ii.

    Along these directions the coefficient integral against the Riesz
    distribution peaks at an interior point of the PSD cone. Indices with
    |n| <= max_degree are skipped; the walk stops at the first box
    prod(n_i + 1) above ``box_limit``.
    """
    w = [weight * real_if_possible(G[i, i]) for i, weight in enumerate(y)]
    low = min(w)
    for multiple in range(1, max_multiple + 1):
        n = MultiIndex(max(1, floor(multiple * c / low + Fraction(1, 2))) for c in w)
        if box_limit is not None and prod(k + 1 for k in n) > box_limit:
            return
        if n.total > max_degree:
            yield n


def _first_concentrated_negative(P: SparsePoly, G: RMatrix, y: Sequence[Fraction], beta: Fraction,
                                 max_degree: int, max_multiple: int,
                                 box_limit: int) -> Optional[Tuple[MultiIndex, Fraction]]:
    for n in concentrated_indices(G, y, max_multiple, max_degree, box_limit):
        coefficient = box_pow_coefficient(P, -beta, n)
        logger.debug("concentrated coefficient", context={"n_index": list(n), "coefficient": coefficient})
        if coefficient < 0:
            return n, coefficient
    return None


def _attempt(alpha: Alpha, field: ScalarField, m: int, frame: List[Vector], y: List[Fraction],
             max_degree: int, verify_bound: int, max_multiple: int, attempt: int, seed: int) -> Optional[Witness]:
    G = witness_gram(m, field, y, frame)
    P = witness_polynomial(frame, y, field)
    if len(frame) <= get_global_config().enumeration.minor_bound and P != det_I_minus_XA(G):
        raise WitnessError("det(A - sum x_i v_i v_i^*)/det(A) differs from det(I - XG)", alpha=alpha.value)

    found = _first_negative(TruncatedSeries.from_poly(P, max_degree), alpha.beta)
    if found is None and max_multiple:
        found = _first_concentrated_negative(P, G, y, alpha.beta, max_degree, max_multiple,
                                             get_global_config().witness.box_limit)
    if found is None:
        return None
    n, coefficient = found
    dilated = dilate(G, n)
    per_beta = coefficient * n.factorial
    value = alpha.value ** n.total * per_beta
    if not is_psd_exact(G) or not is_psd_exact(dilated):
        raise WitnessError("Gram matrix or its dilation failed the PSD check", alpha=alpha.value)

    naive_value, status = None, VerificationStatus.SERIES_ONLY
    if n.total <= verify_bound:
        naive_per = real_if_possible(per_alpha(dilated, alpha.beta, bound=verify_bound))
        naive_value = real_if_possible(det_alpha(dilated, alpha.value, bound=verify_bound))
        if naive_per != per_beta or naive_value != value:
            raise WitnessError("series coefficient and naive enumeration disagree",
                               alpha=alpha.value, n_index=list(n))
        status = VerificationStatus.BOTH
    else:
        logger.warning("witness verified by the series only", context={"n_index": list(n), "bound": verify_bound})

    return Witness(alpha=alpha.value, field=field, m=m, frame=frame, y=y, gram=G, n_index=n,
                   dilated=dilated, value=value, series_coefficient=coefficient, naive_value=naive_value,
                   verification=status, attempt=attempt, max_degree=max_degree, seed=seed)


def find_witness(
        alpha,
        field=ScalarField.REAL,
        max_degree: Optional[int] = None,
        y: Optional[Sequence[Any]] = None,
        seed: int = 0,
        retries: Optional[int] = None,
        verify_bound: Optional[int] = None,
        max_multiple: Optional[int] = None
) -> Union[Witness, WitnessExhaustion]:
    """
    Search for n with det_alpha(G[n]) < 0, first with y (default all ones),
    then with ``retries`` random positive weight vectors. Each attempt scans
    every coefficient up to ``max_degree`` in graded-lex order, then single
    concentrated indices of higher degree. The first verified witness is
    returned.
    """
    alpha = Alpha.of(alpha)
    field = ScalarField(field)
    cfg = get_global_config().witness
    max_degree = cfg.max_degree if max_degree is None else max_degree
    retries = cfg.retries if retries is None else retries
    verify_bound = cfg.verify_bound if verify_bound is None else verify_bound
    max_multiple = cfg.max_multiple if max_multiple is None else max_multiple
    if max_degree < 1:
        raise WitnessError(f"max_degree = {max_degree}", alpha=alpha.value, precondition="D >= 1")
    if max_multiple < 0:
        raise WitnessError(f"max_multiple = {max_multiple}", alpha=alpha.value, precondition="max_multiple >= 0")

    m = minimal_frame_dimension(alpha, field)
    frame = spanning_rank_one_frame(m, field)
    tried: List[List[Fraction]] = []
    with logger.timed("find_witness", alpha=str(alpha), field=field.value, m=m, max_degree=max_degree,
                      max_multiple=max_multiple):
        for attempt in range(retries + 1):
            if attempt == 0:
                weights = _check_weights(frame, [1] * len(frame) if y is None else y)
            else:
                weights = random_positive_vector(make_rng(seed, attempt), len(frame))
            tried.append(weights)
            witness = _attempt(alpha, field, m, frame, weights, max_degree, verify_bound, max_multiple,
                               attempt, seed)
            if witness is not None:
                logger.info("witness found", context={"alpha": str(alpha), "n_index": list(witness.n_index),
                                                      "value": witness.value, "attempt": attempt})
                return witness
            logger.debug("no negative coefficient", context={"attempt": attempt, "max_degree": max_degree})

    logger.info("witness search exhausted", context={"alpha": str(alpha), "attempts": len(tried)})
    return WitnessExhaustion(alpha=alpha.value, field=field, m=m, frame_size=len(frame),
                             max_degree=max_degree, max_multiple=max_multiple, attempts=len(tried),
                             weights=tried, seed=seed)
