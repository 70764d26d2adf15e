import numpy as np
from scipy.special import jv

from core.exceptions import InvalidArgumentError


def bessel_j(n, x):
    """Bessel function of the first kind J_n(x) for integer orders n >= 0."""
    order = np.asarray(n)
    if np.any(order < 0) or np.any(order != np.floor(order)):
        raise InvalidArgumentError(
            'Bessel order must be a nonnegative integer'
        )
    return jv(order, np.asarray(x, dtype=float))


def bessel_j_signed(n, x):
    """J_n(x) for any integer order, using J_{-n} = (-1)^n J_n."""
    n = int(n)
    value = bessel_j(abs(n), x)
    return value if n >= 0 or n % 2 == 0 else -value
