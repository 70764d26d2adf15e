"""Root Green function of a truncated tree by continued fractions."""
import numpy as np

from core.exceptions import InvalidArgumentError

# energies handled per pass, bounds memory to leaves x ENERGY_BLOCK
ENERGY_BLOCK: int = 64


def tree_root_green(spec, omegas, z, root_scale=None):
    """<delta_root, (H - z)^{-1} delta_root> for the tree built by ``spec``.

    Leaves are resolved first; each vertex then sees
    G_v = 1 / (omega_v - z - sum over children G_c).

    With ``root_scale`` the root coupling is averaged out exactly: for a
    Cauchy coupling of that scale E[1 / (omega - w)] = 1 / (-i scale - w)
    whenever Im w > 0, so the root sees omega_root = -i root_scale and
    ``omegas[0]`` is ignored.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(z.imag <= 0):
        raise InvalidArgumentError('resolvent needs Im z > 0')
    if omegas is None:
        omegas = np.zeros(spec.site_count)
    omegas = np.asarray(getattr(omegas, 'omegas', omegas), dtype=float)
    if omegas.shape != (spec.site_count,):
        raise InvalidArgumentError(
            f'{omegas.size} couplings for {spec.site_count} vertices'
        )
    couplings = omegas.astype(complex)
    if root_scale is not None:
        if not root_scale > 0:
            raise InvalidArgumentError(
                f'root scale must be positive: {root_scale}'
            )
        couplings[0] = -1j * root_scale
    levels = spec.levels()
    green = np.empty(z.size, dtype=complex)
    for start in range(0, z.size, ENERGY_BLOCK):
        block = z[start:start + ENERGY_BLOCK]
        first, size = levels[-1]
        g = 1.0 / (couplings[first:first + size, None] - block[None, :])
        for level in range(len(levels) - 2, -1, -1):
            first, size = levels[level]
            children = g.reshape(size, -1, block.size).sum(axis=1)
            g = 1.0 / (
                couplings[first:first + size, None] - block[None, :]
                - children
            )
        green[start:start + ENERGY_BLOCK] = g[0]
    return green
