"""Electron-nuclear spin Hamiltonian, Breit-Rabi diagrams, clock transitions.

The model is the isotropic hyperfine Hamiltonian of a single electron
(S = 1/2) coupled to one nucleus of spin I in a magnetic field along z:

    H/h = (g_e mu_B / h) B Sz  -  (g_n mu_N / h) B Iz  +  A S.I

with every energy expressed in Hz.  Eigenlevels are labelled S0, T-, T0, T+
at low field (electron-nuclear singlet/triplet for I = 1/2) and these labels
are carried to arbitrary field by adiabatic continuation, so that e.g. the
"S0 <-> T0" transition means the same physical pair of levels at any field.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linear_sum_assignment

from .constants import MU_B_OVER_H, MU_N_OVER_H

__all__ = [
    "SpinSystem",
    "EigenSystem",
    "ClockPoint",
    "SPIN_PRESETS",
    "spin_operators",
    "build_hamiltonian",
    "eigensystem",
    "transition_frequencies",
    "field_sweep",
    "sweep_to_csv",
    "find_clock_transition",
]


@dataclass(frozen=True)
class SpinSystem:
    """Parameters of one electron + one nucleus.

    Attributes
    ----------
    g_e : electron g-factor (dimensionless)
    g_n : nuclear g-factor (dimensionless, positive = moment parallel to spin)
    I : nuclear spin quantum number (half-integer >= 0)
    A : isotropic hyperfine constant in Hz
    """

    g_e: float
    g_n: float
    I: float
    A: float

    def __post_init__(self):
        two_I = 2 * self.I
        if abs(two_I - round(two_I)) > 1e-12 or self.I < 0:
            raise ValueError(f"I must be a non-negative half-integer, got {self.I}")
        for name in ("g_e", "g_n", "A"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def dim(self) -> int:
        """Hilbert-space dimension 2(2I+1)."""
        return 2 * (int(round(2 * self.I)) + 1)


# Hyperfine constants for the singly-ionized chalcogen donors in silicon.
# g_n values are assumptions (configurable), not measured inputs.
SPIN_PRESETS = {
    "77Se": SpinSystem(g_e=2.0057, g_n=1.07, I=0.5, A=1.66e9),
    "33S": SpinSystem(g_e=2.0057, g_n=0.4292, I=1.5, A=312e6),
    "123Te": SpinSystem(g_e=2.0057, g_n=-1.4736, I=0.5, A=2.90e9),
    "125Te": SpinSystem(g_e=2.0057, g_n=-1.7766, I=0.5, A=3.50e9),
}


def spin_operators(s: float):
    """Return (sx, sy, sz) matrices for spin quantum number s.

    Basis ordering is m = s, s-1, ..., -s.  sy is returned as a complex
    array; sx and sz are real.
    """
    dim = int(round(2 * s)) + 1
    m = s - np.arange(dim)
    sz = np.diag(m)
    # raising operator: <m+1| s+ |m> = sqrt(s(s+1) - m(m+1))
    sp = np.zeros((dim, dim))
    for k in range(1, dim):
        sp[k - 1, k] = np.sqrt(s * (s + 1) - m[k] * (m[k] + 1))
    sx = (sp + sp.T) / 2.0
    sy = (sp - sp.T) / 2j
    return sx, sy, sz


def build_hamiltonian(sys: SpinSystem, B: float) -> np.ndarray:
    """Hamiltonian matrix in Hz, basis |m_S> x |m_I| (m descending).

    The matrix is real symmetric: the S.I term couples only through
    Sx Ix + Sy Iy = (S+ I- + S- I+)/2, whose matrix elements are real.
    """
    if not np.isfinite(B):
        raise ValueError("B must be finite")
    sx, sy, sz = spin_operators(0.5)
    ix, iy, iz = spin_operators(sys.I)
    dS, dI = 2, int(round(2 * sys.I)) + 1
    kron = np.kron
    H = (
        sys.g_e * MU_B_OVER_H * B * kron(sz, np.eye(dI))
        - sys.g_n * MU_N_OVER_H * B * kron(np.eye(dS), iz)
        + sys.A * (kron(sx, ix) + np.real(kron(sy, iy)) + kron(sz, iz))
    )
    return np.ascontiguousarray(np.real(H))


def _zero_field_labels(sys: SpinSystem):
    """Labels of the B=0 eigenlevels in ascending-energy order.

    At zero field the good quantum numbers are total spin F = I +/- 1/2 and
    its projection mF.  For I = 1/2 the four levels are named S0 (F=0) and
    T-, T0, T+ (F=1); for other I they are named F<F>m<mF>.
    """
    H0 = build_hamiltonian(sys, 0.0)
    sx, sy, sz = spin_operators(0.5)
    ix, iy, iz = spin_operators(sys.I)
    dS, dI = 2, int(round(2 * sys.I)) + 1
    kron = np.kron
    fx = kron(sx, np.eye(dI)) + kron(np.eye(dS), ix)
    fy = kron(sy, np.eye(dI)) + kron(np.eye(dS), iy)
    fz = kron(sz, np.eye(dI)) + kron(np.eye(dS), iz)
    f2 = np.real(fx @ fx + fy @ fy + fz @ fz)
    fz = np.real(fz)

    energies, vecs = np.linalg.eigh(H0)
    # Zero-field levels are degenerate within each F manifold; rediagonalize
    # a combined F^2/Fz operator inside each degenerate block so both quantum
    # numbers are sharp (the combination separates every (F, mF) pair).
    dim = len(energies)
    combo = f2 * (2.0 * dim) + fz
    labels = [None] * dim
    tol = 1e-3 * max(abs(sys.A), 1.0)
    i = 0
    while i < dim:
        j = i
        while j + 1 < dim and energies[j + 1] - energies[i] < tol:
            j += 1
        block = vecs[:, i:j + 1]
        _, rot = np.linalg.eigh(block.T @ combo @ block)
        vecs[:, i:j + 1] = block @ rot
        for k in range(i, j + 1):
            v = vecs[:, k]
            F = 0.5 * (-1 + np.sqrt(1 + 4 * (v @ f2 @ v)))
            mF = v @ fz @ v
            labels[k] = _format_label(sys, F, mF)
        i = j + 1
    return energies, vecs, labels


def _format_label(sys: SpinSystem, F: float, mF: float) -> str:
    if abs(sys.I - 0.5) < 1e-12:
        if round(F) == 0:
            return "S0"
        return {-1: "T-", 0: "T0", 1: "T+"}[int(round(mF))]
    Ff = Fraction(round(2 * F), 2)
    mf = Fraction(round(2 * mF), 2)
    sign = "+" if mf >= 0 else ""
    return f"F{Ff}m{sign}{mf}"


@dataclass(frozen=True)
class EigenSystem:
    """Diagonalized spin system at one field value.

    energies are in Hz, ascending; states[:, k] is the eigenvector of
    energies[k] in the |m_S, m_I> product basis; labels[k] is the adiabatic
    tag continued from B = 0.
    """

    B: float
    energies: np.ndarray
    states: np.ndarray
    labels: tuple

    def energy_of(self, label: str) -> float:
        try:
            return self.energies[self.labels.index(label)]
        except ValueError:
            raise KeyError(f"no level labelled {label!r}; have {self.labels}") from None

    def state_of(self, label: str) -> np.ndarray:
        return self.states[:, self.labels.index(label)]


def _continue_labels(prev_vecs, prev_labels, vecs):
    """Assign labels to new eigenvectors by maximal overlap with the old."""
    overlap = np.abs(prev_vecs.T.conj() @ vecs)
    row, col = linear_sum_assignment(-overlap)
    labels = [None] * vecs.shape[1]
    for r, c in zip(row, col):
        labels[c] = prev_labels[r]
    return labels


def _sweep_eigensystems(sys: SpinSystem, B_values):
    """Yield EigenSystem at each field of a monotone-from-zero sweep.

    Labels are continued point to point by eigenvector overlap; B_values
    must start at (or be prefixed by) fields dense enough that adjacent
    overlaps are unambiguous (step <= 1% of the span is the contract).
    """
    energies, vecs, labels = _zero_field_labels(sys)
    prev_vecs, prev_labels = vecs, labels
    for B in B_values:
        e, v = np.linalg.eigh(build_hamiltonian(sys, B))
        lab = _continue_labels(prev_vecs, prev_labels, v)
        prev_vecs, prev_labels = v, lab
        yield EigenSystem(B=B, energies=e, states=v, labels=tuple(lab))


def eigensystem(sys: SpinSystem, B: float, n_steps: int = 101) -> EigenSystem:
    """Exact dense diagonalization with labels continued adiabatically from B=0."""
    if not np.isfinite(B):
        raise ValueError("B must be finite")
    out = None
    for out in _sweep_eigensystems(sys, np.linspace(0.0, B, max(2, n_steps))):
        pass
    return out


def transition_frequencies(sys: SpinSystem, B: float, pairs):
    """Frequencies (Hz) of label pairs at field B.

    pairs is an iterable of (label_a, label_b); each result is
    (pair, E_upper - E_lower) with the frequency always positive.
    """
    es = eigensystem(sys, B)
    out = []
    for pair in pairs:
        a, b = pair
        f = abs(es.energy_of(b) - es.energy_of(a))
        out.append((tuple(pair), f))
    return out


def field_sweep(sys: SpinSystem, B_min: float, B_max: float, n_points: int, pairs):
    """Breit-Rabi table: transition frequencies on a field grid.

    Returns (B_grid, freqs) where freqs[i, j] is the frequency of pairs[j]
    at B_grid[i].  Labels are continued along a single sweep that starts at
    zero field, so the table is consistent row to row.
    """
    if not (B_min < B_max):
        raise ValueError("need B_min < B_max")
    if n_points < 2:
        raise ValueError("need n_points >= 2")
    pairs = [tuple(p) for p in pairs]
    grid = np.linspace(B_min, B_max, n_points)
    # Prefix a fine ramp from 0 to the first grid point so continuation is
    # seeded identically regardless of B_min.
    ramp = np.linspace(0.0, B_min, 101)[1:-1] if B_min != 0.0 else np.empty(0)
    freqs = np.empty((n_points, len(pairs)))
    for idx, es in enumerate(_sweep_eigensystems(sys, np.concatenate([ramp, grid]))):
        if idx < len(ramp):
            continue
        i = idx - len(ramp)
        for j, (a, b) in enumerate(pairs):
            freqs[i, j] = abs(es.energy_of(b) - es.energy_of(a))
    return grid, freqs


def sweep_to_csv(path, B_grid, freqs, pairs):
    """Write a field sweep as CSV: header B_T,<a>-<b>_Hz,..."""
    cols = ",".join(f"{a}-{b}_Hz" for a, b in pairs)
    with open(path, "w") as fh:
        fh.write(f"B_T,{cols}\n")
        for B, row in zip(B_grid, freqs):
            vals = ",".join(f"{v:.17e}" for v in row)
            fh.write(f"{B:.17e},{vals}\n")


@dataclass(frozen=True)
class ClockPoint:
    """A field where df/dB of a transition vanishes."""

    B_cl: float      # field, T
    f: float         # transition frequency there, Hz
    d1: float        # residual df/dB, Hz/T
    d2: float        # d2f/dB2, Hz/T^2 (centered difference)
    fd_step: float   # finite-difference step used, T


def _fd_step(B: float) -> float:
    return max(1e-9, 1e-6 * abs(B))


def find_clock_transition(sys: SpinSystem, pair, B_range, n_scan: int = 257):
    """All fields in B_range where df/dB of the labelled transition crosses zero.

    The derivative is a centered finite difference; zeros are bracketed on a
    scan grid and refined by bisection to max(1 pT, 1e-12 |B|).  Returns a
    (possibly empty) list of ClockPoint.
    """
    B_lo, B_hi = B_range
    if not (np.isfinite(B_lo) and np.isfinite(B_hi) and B_lo < B_hi):
        raise ValueError("B_range must be a finite increasing pair")
    pair = tuple(pair)

    # Labels are continued from the nearest field already visited instead of
    # re-sweeping from zero on every derivative evaluation; the walk step
    # keeps the 1%-of-span continuation contract of _sweep_eigensystems.
    step_max = max((B_hi - B_lo) / 100.0, 1e-9)
    _, vecs0, labels0 = _zero_field_labels(sys)
    visited = [(0.0, vecs0, labels0)]

    def f(B):
        B0, v, lab = min(visited, key=lambda entry: abs(entry[0] - B))
        n_walk = max(1, int(np.ceil(abs(B - B0) / step_max)))
        e = None
        for Bi in np.linspace(B0, B, n_walk + 1)[1:]:
            e, v_new = np.linalg.eigh(build_hamiltonian(sys, Bi))
            lab = _continue_labels(v, lab, v_new)
            v = v_new
        if e is None:  # B coincides with the anchor
            e, _ = np.linalg.eigh(build_hamiltonian(sys, B))
        visited.append((B, v, lab))
        by_label = dict(zip(lab, e))
        return abs(by_label[pair[1]] - by_label[pair[0]])

    def d1(B):
        h = _fd_step(B)
        return (f(B + h) - f(B - h)) / (2 * h)

    grid = np.linspace(B_lo, B_hi, n_scan)
    dvals = np.array([d1(B) for B in grid])

    points = []

    def add_point(B):
        # d2 needs a coarser step than d1: the second difference must rise
        # above the ~eps*f floating-point floor of the eigenvalues.
        h = max(1e-5, 1e-3 * abs(B))
        fc = f(B)
        d2 = (f(B + h) - 2 * fc + f(B - h)) / h**2
        points.append(ClockPoint(B_cl=B, f=fc, d1=d1(B), d2=d2, fd_step=h))

    # exact (to derivative resolution) zeros on the grid, e.g. B = 0
    flat = np.abs(dvals) < 1e-3  # Hz/T; far below the 1 Hz/uT contract
    for B in grid[flat]:
        add_point(B)
    for k in range(n_scan - 1):
        if flat[k] or flat[k + 1]:
            continue
        if dvals[k] * dvals[k + 1] < 0:
            a, b = grid[k], grid[k + 1]
            da = dvals[k]
            while b - a > max(1e-12, 1e-12 * abs(b)):
                m = 0.5 * (a + b)
                dm = d1(m)
                if dm == 0.0:
                    a = b = m
                elif da * dm < 0:
                    b = m
                else:
                    a, da = m, dm
            add_point(0.5 * (a + b))
    points.sort(key=lambda p: p.B_cl)
    return points
