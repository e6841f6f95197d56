"""Fixed-step mass-action integration.

Classical RK4 on cdot = Y * A * Psi(c). Any Runge-Kutta step moves c along a
combination of stoichiometric columns, so linear conservation laws survive up
to roundoff; the integrator checks them at every recorded step and treats a
violation as an internal bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError, InternalError
from ..exactcore import right_kernel_rational, transpose
from .network import build_rate_matrix, stoichiometric_matrix
from .parser import Network
from .toric import psi_vector


@dataclass(frozen=True)
class Trajectory:
    times: tuple[float, ...]
    states: tuple[tuple[float, ...], ...]

    @property
    def final(self) -> tuple[float, ...]:
        return self.states[-1]


def conservation_laws(net: Network) -> list[list[Fraction]]:
    """Basis of the left kernel of the stoichiometric matrix."""
    return right_kernel_rational(transpose(stoichiometric_matrix(net)))


def simulate(
    net: Network,
    bindings: dict | None,
    c0,
    t_end: float,
    dt: float,
    record_every: int = 1,
) -> Trajectory:
    c0 = [float(x) for x in c0]
    if len(c0) != net.n_species:
        raise InputError(f"c0 needs {net.n_species} entries, got {len(c0)}")
    if any(x < 0 for x in c0):
        raise InputError("initial concentrations must be non-negative")
    if dt <= 0 or t_end <= 0:
        raise InputError("t_end and dt must be positive")

    a = [[float(e) for e in row] for row in build_rate_matrix(net, bindings or {})]
    y = [[float(net.complexes[col][row]) for col in range(net.n_complexes)]
         for row in range(net.n_species)]

    def deriv(c: list[float]) -> list[float]:
        psi = psi_vector(net, c)
        flux = [sum(arow[l] * psi[l] for l in range(len(psi))) for arow in a]
        return [sum(yrow[k] * flux[k] for k in range(len(flux))) for yrow in y]

    laws = [[float(x) for x in w] for w in conservation_laws(net)]
    law_refs = [sum(wi * ci for wi, ci in zip(w, c0)) for w in laws]

    def check_conservation(c: list[float]) -> None:
        for w, ref in zip(laws, law_refs):
            drift = abs(sum(wi * ci for wi, ci in zip(w, c)) - ref)
            if drift > 1e-8 * max(1.0, abs(ref)):
                raise InternalError(f"conservation drift {drift:.3e} exceeds tolerance")

    times = [0.0]
    states = [tuple(c0)]
    c = list(c0)
    t = 0.0
    step = 0
    while t < t_end - 1e-12:
        h = min(dt, t_end - t)
        k1 = deriv(c)
        k2 = deriv([ci + h / 2 * ki for ci, ki in zip(c, k1)])
        k3 = deriv([ci + h / 2 * ki for ci, ki in zip(c, k2)])
        k4 = deriv([ci + h * ki for ci, ki in zip(c, k3)])
        c = [
            ci + h / 6 * (a1 + 2 * a2 + 2 * a3 + a4)
            for ci, a1, a2, a3, a4 in zip(c, k1, k2, k3, k4)
        ]
        t += h
        step += 1
        if min(c) < -1e-12:
            raise InputError(
                f"concentration went negative at t = {t:.6g}; use a smaller dt"
            )
        if step % record_every == 0 or t >= t_end - 1e-12:
            check_conservation(c)
            times.append(t)
            states.append(tuple(c))
    return Trajectory(times=tuple(times), states=tuple(states))
