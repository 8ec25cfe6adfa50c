from alphaperm.enums.field_e import ScalarField
from alphaperm.enums.alpha_e import MembershipReason
from alphaperm.enums.quotient_e import QuotientMode
from alphaperm.enums.permanent_e import PermanentMethod
from alphaperm.enums.verification_e import VerificationStatus

__all__ = [
    'ScalarField',
    'MembershipReason',
    'QuotientMode',
    'PermanentMethod',
    'VerificationStatus',
]
