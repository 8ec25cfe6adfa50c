from typing import Optional

import numpy as np

from alphaperm.config.model import NonnegativityReport
from alphaperm.enums.field_e import ScalarField
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import real_if_possible
from alphaperm.permanent.dilation import dilate
from alphaperm.permanent.multi_index import MultiIndex
from alphaperm.permanent.permanent import det_alpha
from alphaperm.utils.exceptions.witness import WitnessError
from alphaperm.utils.logger import Logger
from alphaperm.utils.sampling import make_rng, random_hermitian_psd_matrix, random_psd_matrix
from alphaperm.witness.sets import classify_alpha

logger = Logger.get_logger("witness")


def _random_psd(rng: np.random.Generator, field: ScalarField, n: int) -> RMatrix:
    rank = int(rng.integers(0, n + 1))
    if field == ScalarField.REAL:
        return random_psd_matrix(rng, n, rank=rank)
    return random_hermitian_psd_matrix(rng, n, rank=rank)


def _random_dilation(rng: np.random.Generator, field: ScalarField, size: int) -> RMatrix:
    """G[n] with |n| = size for a PSD G of random smaller order"""
    order = int(rng.integers(1, size + 1))
    cuts = sorted(int(c) for c in rng.integers(0, size + 1, size=order - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [size])]
    return dilate(_random_psd(rng, field, order), MultiIndex(parts))


def nonnegativity_scan(alpha, field=ScalarField.REAL, max_size: int = 5, samples: int = 100,
                       seed: int = 0) -> NonnegativityReport:
    """
    det_alpha(A) >= 0 for random exact PSD A of order <= max_size: half Gram
    matrices, half dilations of smaller Gram matrices. Only members of the
    nonnegativity set are scanned.
    """
    cls = classify_alpha(alpha, field)
    if not cls.member:
        raise WitnessError("nonnegativity scan of a non-member", alpha=cls.alpha, precondition="member alpha")
    if max_size < 1:
        raise WitnessError(f"max_size = {max_size}", alpha=cls.alpha, precondition="max_size >= 1")
    rng = make_rng(seed)
    report = NonnegativityReport(alpha=cls.alpha, field=cls.field, seed=seed)
    with logger.timed("nonnegativity_scan", alpha=str(cls.alpha), field=cls.field.value, samples=samples):
        for trial in range(samples):
            size = int(rng.integers(1, max_size + 1))
            if trial % 2 == 0:
                A = _random_psd(rng, cls.field, size)
            else:
                A = _random_dilation(rng, cls.field, size)
            value = real_if_possible(det_alpha(A, cls.alpha, bound=max_size))
            report.trials += 1
            if report.min_value is None or value < report.min_value:
                report.min_value = value
            if value < 0:
                logger.debug("negative alpha-determinant", context={"trial": trial, "value": value})
                report.record({"matrix": A, "value": value})
    return report
