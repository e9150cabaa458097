from .core import (
    InternalNonExactDivision,
    QSum,
    Term,
    as_rfunc,
    binom,
    const,
    limit_q_to_one,
    mono,
    phi_sum,
    poch,
    poch_q,
    qbinom,
    qint,
    qpoch,
    qpoch_factors,
    qpow,
    sign,
)
