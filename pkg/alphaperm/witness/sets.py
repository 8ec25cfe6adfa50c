"""
Membership of alpha in the nonnegativity sets.

    D_R = {-1/(m+1)} u {2/(m+1)} u {0}
    D_C = {+-1/(m+1)} u {0}                     (m = 0, 1, 2, ...)

C(m) = N u [m-1, oo) and R(m) = C(m)/2 decide which powers of a
determinant are completely monotone; the smallest m with 1/alpha outside
R(m) (resp. C(m)) sizes the witness frame.
"""
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict

from alphaperm.enums.alpha_e import MembershipReason
from alphaperm.enums.field_e import ScalarField
from alphaperm.numeric.scalar import parse_rational
from alphaperm.permanent.alpha import Alpha
from alphaperm.utils.exceptions.witness import MemberAlphaError, UnsupportedAlphaError, WitnessError


def _check_m(m: int) -> None:
    if m < 1:
        raise WitnessError(f"m = {m}", precondition="m >= 1")


def C_contains(m: int, x) -> bool:
    """x in N or x >= m - 1"""
    _check_m(m)
    x = parse_rational(x)
    return (x >= 0 and x.denominator == 1) or x >= m - 1


def R_contains(m: int, x) -> bool:
    """2x in C(m)"""
    return C_contains(m, 2 * parse_rational(x))


class AlphaClass(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: Fraction
    field: ScalarField
    member: bool
    reason: MembershipReason
    m: Optional[int] = None
    conjecture_claimed: bool

    @property
    def disagreement(self) -> bool:
        """The earlier conjectured set and the true set differ at this alpha"""
        return self.conjecture_claimed != self.member

    def to_dict(self):
        return {
            "alpha": str(self.alpha),
            "field": self.field.value,
            "member": self.member,
            "reason": self.reason.value,
            "m": self.m,
            "conjecture4_claimed": self.conjecture_claimed,
            "disagreement": self.disagreement,
        }


def _conjectured_member(alpha: Alpha, field: ScalarField) -> bool:
    """{-1/(m+1)} u [0, 2] (real) or {-1/(m+1)} u [0, 1] (complex)"""
    upper = 2 if field == ScalarField.REAL else 1
    return alpha.neg_reciprocal() is not None or 0 <= alpha.value <= upper


def classify_alpha(alpha, field=ScalarField.REAL) -> AlphaClass:
    alpha = Alpha.of(alpha)
    field = ScalarField(field)
    reason, m = MembershipReason.NON_MEMBER, None
    if alpha.value == 0:
        reason = MembershipReason.ZERO
    elif alpha.neg_reciprocal() is not None:
        reason, m = MembershipReason.NEG_RECIPROCAL, alpha.neg_reciprocal()
    elif field == ScalarField.REAL and alpha.two_over() is not None:
        reason, m = MembershipReason.TWO_OVER, alpha.two_over()
    elif field == ScalarField.COMPLEX and alpha.pos_reciprocal() is not None:
        reason, m = MembershipReason.POS_RECIPROCAL, alpha.pos_reciprocal()
    return AlphaClass(
        alpha=alpha.value,
        field=field,
        member=reason != MembershipReason.NON_MEMBER,
        reason=reason,
        m=m,
        conjecture_claimed=_conjectured_member(alpha, field),
    )


def minimal_frame_dimension(alpha, field=ScalarField.REAL) -> int:
    """
    Smallest m >= 1 with beta = 1/alpha outside R(m) (real) or C(m)
    (complex), for a positive non-member alpha.
    """
    cls = classify_alpha(alpha, field)
    if cls.member:
        raise MemberAlphaError(f"{cls.reason.value}", alpha=cls.alpha)
    if cls.alpha <= 0:
        raise UnsupportedAlphaError("the frame construction needs alpha > 0", alpha=cls.alpha)
    beta = 1 / cls.alpha
    contains = R_contains if cls.field == ScalarField.REAL else C_contains
    m = 1
    while contains(m, beta):
        m += 1
    return m
