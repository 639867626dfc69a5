"""Two-level pulsed magnetic-resonance experiments under configurable noise.

The qubit is the labelled two-level transition (e.g. the singlet-triplet pair
at its clock point) treated as a Bloch vector in the rotating frame.  Noise
has three ingredients:

* a quasi-static detuning drawn once per trajectory from N(0, sigma_qs),
* a power-law dephasing spectrum S(omega) = S0 * omega**-alpha synthesized
  as a sum of log-spaced random-phase tones (two-sided angular-frequency
  PSD convention: Var(delta) = (1/pi) * integral of S over [omega_lo, omega_hi]),
* Markovian damping with time constants T1 and T2_intr applied analytically
  during free evolution (stretch exponent n generalizes the transverse decay
  to exp(-(t/T2)^n)).

Pulses are ideal rotations when their duration is zero; a finite duration
turns them into rotations about the tilted drive axis using the detuning
frozen at the pulse midpoint (valid for the slow noise modelled here).

Every Monte-Carlo result carries a standard error, and trajectory i of a run
seeded with s draws from the dedicated stream (s, i), so results do not
depend on execution order.
"""

from dataclasses import dataclass, field
import math

import numpy as np
from scipy.optimize import least_squares

__all__ = [
    "QubitModel",
    "NoiseModel",
    "Pulse",
    "Delay",
    "PulseSequence",
    "SignalTrace",
    "FitResult",
    "evolve",
    "rabi_experiment",
    "ramsey_experiment",
    "hahn_echo_experiment",
    "cpmg_experiment",
    "t1_experiment",
    "refocusing_angle_scan",
    "fit_decay",
]


@dataclass(frozen=True)
class QubitModel:
    """Two-level qubit parameters.

    omega_R is the on-resonance Rabi angular frequency (rad/s) per unit
    drive amplitude; T1 and T2_intr may be inf.
    """

    f0: float = 1.66e9
    omega_R: float = 2 * np.pi * 1e3
    T1: float = np.inf
    T2_intr: float = np.inf
    stretch: float = 1.0

    def __post_init__(self):
        if self.omega_R <= 0:
            raise ValueError("omega_R must be positive")
        if self.T2_intr > 2 * self.T1:
            raise ValueError("T2_intr must not exceed 2*T1")
        if not 1.0 <= self.stretch <= 3.0:
            raise ValueError("stretch exponent must lie in [1, 3]")


@dataclass(frozen=True)
class NoiseModel:
    """Quasi-static Gaussian detuning plus power-law spectral noise.

    sigma_qs is in rad/s.  The spectral part S(omega) = S0 * omega**-alpha is
    realized as n_tones log-spaced cosines between omega_lo and omega_hi with
    amplitudes a_k = sqrt(2 S(omega_k) d_omega_k / pi) and per-trajectory
    uniform random phases.
    """

    sigma_qs: float = 0.0
    alpha: float = 1.0
    S0: float = 0.0
    omega_lo: float = 2 * np.pi * 1e-3
    omega_hi: float = 2 * np.pi * 1e3
    seed: int = 0
    n_tones: int = 200

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 2.0:
            raise ValueError("alpha must lie in [0, 2]")
        if not self.omega_lo < self.omega_hi:
            raise ValueError("need omega_lo < omega_hi")
        if self.sigma_qs < 0 or self.S0 < 0:
            raise ValueError("noise amplitudes must be non-negative")

    @classmethod
    def quiet(cls, seed: int = 0) -> "NoiseModel":
        return cls(seed=seed)

    @classmethod
    def quasi_static(cls, sigma_qs: float, seed: int = 0) -> "NoiseModel":
        return cls(sigma_qs=sigma_qs, seed=seed)

    def tone_table(self):
        """(omega_k, a_k) arrays of the discrete-tone synthesis."""
        if self.S0 == 0.0:
            return np.empty(0), np.empty(0)
        omega = np.geomspace(self.omega_lo, self.omega_hi, self.n_tones)
        d_omega = np.gradient(omega)
        amp = np.sqrt(2.0 * self.S0 * omega**-self.alpha * d_omega / np.pi)
        return omega, amp


@dataclass(frozen=True)
class Pulse:
    """Ideal (duration 0) or finite-duration rotation about an equatorial axis."""

    theta: float
    phase: float = 0.0
    duration: float = 0.0

    def __post_init__(self):
        if self.duration < 0:
            raise ValueError("pulse duration must be >= 0")


@dataclass(frozen=True)
class Delay:
    tau: float

    def __post_init__(self):
        if self.tau < 0:
            raise ValueError("delay must be >= 0")


@dataclass(frozen=True)
class PulseSequence:
    items: tuple

    def __post_init__(self):
        if len(self.items) == 0:
            raise ValueError("sequence must be non-empty")
        for it in self.items:
            if not isinstance(it, (Pulse, Delay)):
                raise ValueError(f"sequence items must be Pulse or Delay, got {it!r}")

    @classmethod
    def of(cls, *items) -> "PulseSequence":
        return cls(items=tuple(items))


@dataclass(frozen=True)
class SignalTrace:
    """A simulated x-y trace with per-point Monte-Carlo standard errors."""

    x: np.ndarray
    y: np.ndarray
    stderr: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        x = np.asarray(self.x)
        if len(x) > 1 and not np.all(np.diff(x) > 0):
            raise ValueError("x must be strictly increasing")

    def to_csv(self, path):
        with open(path, "w") as fh:
            fh.write("x,y,stderr\n")
            for xi, yi, si in zip(self.x, self.y, self.stderr):
                fh.write(f"{xi:.17e},{yi:.17e},{si:.17e}\n")


# ---------------------------------------------------------------------------
# trajectory engine


class _NoiseDraws:
    """Frozen per-trajectory noise realizations for one Monte-Carlo run."""

    def __init__(self, noise: NoiseModel, n_traj: int):
        if n_traj < 1:
            raise ValueError("n_trajectories must be >= 1")
        self.n_traj = n_traj
        if noise is None:
            noise = NoiseModel.quiet()
        self.omega, self.amp = noise.tone_table()
        n_tones = len(self.omega)
        self.delta_qs = np.empty(n_traj)
        self.phi = np.empty((n_traj, n_tones))
        for i in range(n_traj):
            rng = np.random.default_rng([noise.seed, i])
            self.delta_qs[i] = rng.normal(0.0, noise.sigma_qs) if noise.sigma_qs else 0.0
            self.phi[i] = rng.uniform(0.0, 2 * np.pi, n_tones)

    def phase_integral(self, t0: float, t1: float) -> np.ndarray:
        """Accumulated noise phase over [t0, t1] per trajectory (rad)."""
        out = self.delta_qs * (t1 - t0)
        if len(self.omega):
            arg1 = np.sin(self.omega * t1 + self.phi)
            arg0 = np.sin(self.omega * t0 + self.phi)
            out = out + ((arg1 - arg0) / self.omega * self.amp).sum(axis=1)
        return out

    def instantaneous(self, t: float) -> np.ndarray:
        """Detuning delta(t) per trajectory (rad/s)."""
        out = self.delta_qs.copy()
        if len(self.omega):
            out += (self.amp * np.cos(self.omega * t + self.phi)).sum(axis=1)
        return out


def _rotate_z(b: np.ndarray, phase: np.ndarray):
    c, s = np.cos(phase), np.sin(phase)
    x = b[:, 0] * c - b[:, 1] * s
    y = b[:, 0] * s + b[:, 1] * c
    b[:, 0], b[:, 1] = x, y


def _rotate_axis(b: np.ndarray, axis: np.ndarray, angle: np.ndarray):
    """Rodrigues rotation, vectorized over trajectories; axis must be unit."""
    c = np.cos(angle)[:, None]
    s = np.sin(angle)[:, None]
    dot = (axis * b).sum(axis=1)[:, None]
    b[:] = b * c + np.cross(axis, b) * s + axis * dot * (1.0 - c)


def _stretch_factor(qubit: QubitModel, t_free: float, tau: float) -> float:
    if not np.isfinite(qubit.T2_intr) or tau == 0.0:
        return 1.0
    n = qubit.stretch
    return math.exp(-(((t_free + tau) / qubit.T2_intr) ** n) + ((t_free / qubit.T2_intr) ** n))


def _run(qubit: QubitModel, sequence: PulseSequence, draws: _NoiseDraws,
         detuning: float = 0.0):
    """Propagate the trajectory ensemble; return Bloch vectors (n_traj, 3)."""
    n = draws.n_traj
    b = np.zeros((n, 3))
    b[:, 2] = 1.0
    t = 0.0        # wall time
    t_free = 0.0   # cumulative free-evolution time (sets intrinsic decay)
    for item in sequence.items:
        if isinstance(item, Delay):
            tau = item.tau
            phase = draws.phase_integral(t, t + tau) + detuning * tau
            _rotate_z(b, phase)
            fac = _stretch_factor(qubit, t_free, tau)
            if fac != 1.0:
                b[:, :2] *= fac
            if np.isfinite(qubit.T1):
                b[:, 2] = 1.0 + (b[:, 2] - 1.0) * math.exp(-tau / qubit.T1)
            t += tau
            t_free += tau
        else:
            if item.duration == 0.0:
                axis = np.broadcast_to(
                    np.array([np.cos(item.phase), np.sin(item.phase), 0.0]), (n, 3))
                _rotate_axis(b, axis, np.full(n, item.theta))
            else:
                omega_drive = item.theta / item.duration
                delta = draws.instantaneous(t + item.duration / 2.0) + detuning
                w = np.sqrt(omega_drive**2 + delta**2)
                axis = np.empty((n, 3))
                axis[:, 0] = omega_drive * np.cos(item.phase)
                axis[:, 1] = omega_drive * np.sin(item.phase)
                axis[:, 2] = delta
                axis /= np.maximum(w, 1e-300)[:, None]
                _rotate_axis(b, axis, w * item.duration)
            t += item.duration
    return b


def evolve(qubit: QubitModel, sequence: PulseSequence, noise: NoiseModel = None,
           n_trajectories: int = 2000, detuning: float = 0.0):
    """Ensemble-mean Bloch vector after a pulse sequence.

    Returns (mean, stderr), each shape (3,).  Initial state is the north
    pole (0, 0, 1).
    """
    draws = _NoiseDraws(noise, n_trajectories)
    b = _run(qubit, sequence, draws, detuning=detuning)
    mean = b.mean(axis=0)
    if n_trajectories > 1:
        se = b.std(axis=0, ddof=1) / np.sqrt(n_trajectories)
    else:
        se = np.zeros(3)
    return mean, se


def _grid_signal(qubit, sequences, draws, detuning=0.0, component=2, sign=1.0):
    y = np.empty(len(sequences))
    se = np.empty(len(sequences))
    n = draws.n_traj
    for i, seq in enumerate(sequences):
        b = _run(qubit, seq, draws, detuning=detuning)
        v = sign * b[:, component]
        y[i] = v.mean()
        se[i] = v.std(ddof=1) / np.sqrt(n) if n > 1 else 0.0
    return y, se


def _check_grid(grid):
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) < 1 or (len(grid) > 1 and not np.all(np.diff(grid) > 0)):
        raise ValueError("grid must be 1-D strictly increasing")
    return grid


# ---------------------------------------------------------------------------
# experiments


def rabi_experiment(qubit: QubitModel, amplitude: float, durations, noise: NoiseModel = None,
                    n_trajectories: int = 2000) -> SignalTrace:
    """Drive for a variable duration; y(t) = <z> oscillates at omega_R*amplitude."""
    durations = _check_grid(durations)
    draws = _NoiseDraws(noise, n_trajectories)
    seqs = [PulseSequence.of(Pulse(theta=qubit.omega_R * amplitude * t, phase=0.0, duration=t))
            if t > 0 else PulseSequence.of(Pulse(theta=0.0))
            for t in durations]
    y, se = _grid_signal(qubit, seqs, draws)
    meta = {"experiment": "rabi", "amplitude": amplitude,
            "seed": noise.seed if noise else None, "n_trajectories": n_trajectories}
    return SignalTrace(x=durations, y=y, stderr=se, meta=meta)


def ramsey_experiment(qubit: QubitModel, detuning: float, taus, noise: NoiseModel = None,
                      n_trajectories: int = 2000) -> SignalTrace:
    """pi/2 - tau - pi/2 fringes; detuning in rad/s; y(0) = 1."""
    taus = _check_grid(taus)
    draws = _NoiseDraws(noise, n_trajectories)
    half = np.pi / 2
    seqs = [PulseSequence.of(Pulse(half), Delay(t), Pulse(half)) for t in taus]
    # the two ideal pi/2_x pulses map the accumulated phase to z = -cos(phi)
    y, se = _grid_signal(qubit, seqs, draws, detuning=detuning, sign=-1.0)
    meta = {"experiment": "ramsey", "detuning": detuning,
            "seed": noise.seed if noise else None, "n_trajectories": n_trajectories}
    return SignalTrace(x=taus, y=y, stderr=se, meta=meta)


def _echo_sequence(tau: float, n_pulses: int, leading_phase: float, theta_refocus: float = np.pi):
    """pi/2 - [tau/2N - pi - tau/2N]*N echo train; tau is the total free time."""
    items = [Pulse(np.pi / 2, phase=leading_phase)]
    gap = tau / (2 * n_pulses)
    for k in range(n_pulses):
        items.append(Delay(gap))
        items.append(Pulse(theta_refocus, phase=0.0 if k % 2 == 0 else np.pi))
        items.append(Delay(gap))
    items.append(Pulse(np.pi / 2, phase=0.0))
    return PulseSequence(items=tuple(items))


def _echo_signal(qubit, taus, n_pulses, draws, phase_cycle, offset):
    """Phase-cycled echo amplitude vs total free-evolution time."""
    # reference sign: noiseless, damping-free run fixes the ideal +1 direction
    ref_qubit = QubitModel(f0=qubit.f0, omega_R=qubit.omega_R)
    quiet = _NoiseDraws(NoiseModel.quiet(), 1)
    ref = _run(ref_qubit, _echo_sequence(1.0, n_pulses, 0.0), quiet)[0, 2]
    sign = 1.0 if ref >= 0 else -1.0

    y = np.empty(len(taus))
    se = np.empty(len(taus))
    n = draws.n_traj
    for i, tau in enumerate(taus):
        b0 = _run(qubit, _echo_sequence(tau, n_pulses, 0.0), draws)[:, 2] + offset
        if phase_cycle:
            b1 = _run(qubit, _echo_sequence(tau, n_pulses, np.pi), draws)[:, 2] + offset
            v = sign * (b0 - b1) / 2.0
        else:
            v = sign * b0
        y[i] = v.mean()
        se[i] = v.std(ddof=1) / np.sqrt(n) if n > 1 else 0.0
    return y, se


def hahn_echo_experiment(qubit: QubitModel, taus, noise: NoiseModel = None,
                         phase_cycle: bool = True, offset: float = 0.0,
                         n_trajectories: int = 2000, fit_model: str = "exponential"):
    """Single-pi echo decay vs total free time 2*tau.

    taus is the grid of half-delays; the trace abscissa is 2*tau.  Returns
    (trace, fit) with the decay fitted by fit_decay.
    """
    taus = _check_grid(taus)
    draws = _NoiseDraws(noise, n_trajectories)
    y, se = _echo_signal(qubit, 2 * taus, 1, draws, phase_cycle, offset)
    meta = {"experiment": "hahn", "phase_cycle": phase_cycle,
            "seed": noise.seed if noise else None, "n_trajectories": n_trajectories}
    trace = SignalTrace(x=2 * taus, y=y, stderr=se, meta=meta)
    fit = fit_decay(trace, model=fit_model)
    return trace, fit


def cpmg_experiment(qubit: QubitModel, n_pulses_list, taus, noise: NoiseModel = None,
                    n_trajectories: int = 2000, fit_model: str = "stretched"):
    """Alternating-phase CPMG: fitted T2 versus refocusing-pulse count.

    taus is the grid of *total* free-evolution times.  Returns a dict with
    per-N traces and fits, the fitted T2 values, and the log-log scaling
    exponent of T2 against N.
    """
    taus = _check_grid(taus)
    n_list = [int(n) for n in n_pulses_list]
    if any(n < 1 for n in n_list):
        raise ValueError("pulse counts must be >= 1")
    draws = _NoiseDraws(noise, n_trajectories)
    traces, fits, t2s = {}, {}, {}
    for n in n_list:
        y, se = _echo_signal(qubit, taus, n, draws, phase_cycle=True, offset=0.0)
        meta = {"experiment": "cpmg", "n_pulses": n,
                "seed": noise.seed if noise else None, "n_trajectories": n_trajectories}
        trace = SignalTrace(x=taus, y=y, stderr=se, meta=meta)
        fit = fit_decay(trace, model=fit_model)
        traces[n], fits[n] = trace, fit
        t2s[n] = fit.params["T"]
    exponent = float("nan")
    if len(n_list) >= 2:
        logs = np.polyfit(np.log(n_list), np.log([t2s[n] for n in n_list]), 1)
        exponent = float(logs[0])
    return {"traces": traces, "fits": fits, "T2": t2s, "scaling_exponent": exponent}


def t1_experiment(qubit: QubitModel, waits) -> SignalTrace:
    """Inversion-recovery difference signal: y(tau) = exp(-tau/T1).

    Models the two-transient protocol (with / without a leading inversion
    pi-pulse); the normalized difference of the two transients is a pure
    exponential in the wait time.
    """
    waits = _check_grid(waits)
    y = np.exp(-waits / qubit.T1) if np.isfinite(qubit.T1) else np.ones_like(waits)
    meta = {"experiment": "t1", "T1": qubit.T1}
    return SignalTrace(x=waits, y=y, stderr=np.zeros_like(y), meta=meta)


def refocusing_angle_scan(qubit: QubitModel, thetas) -> SignalTrace:
    """Ideal tip-angle scan: echo amplitude sin^2(theta/2)."""
    thetas = _check_grid(thetas)
    if np.any(thetas < 0) or np.any(thetas > 2 * np.pi + 1e-12):
        raise ValueError("refocusing angles must lie in [0, 2*pi]")
    y = np.sin(thetas / 2.0) ** 2
    meta = {"experiment": "tip_angle"}
    return SignalTrace(x=thetas, y=y, stderr=np.zeros_like(y), meta=meta)


# ---------------------------------------------------------------------------
# fitting


@dataclass(frozen=True)
class FitResult:
    model: str
    params: dict
    sigmas: dict
    residual_norm: float
    converged: bool

    def to_json_dict(self, seed=None):
        return {"model": self.model, "params": self.params, "sigmas": self.sigmas,
                "residual": self.residual_norm, "converged": self.converged,
                "seed": seed}


_FIT_MODELS = ("exponential", "stretched", "gaussian_sinusoid", "sin_squared")


def _fit_eval(model, x, p):
    if model == "exponential":
        a, T, b = p
        return a * np.exp(-x / T) + b
    if model == "stretched":
        a, T, nexp, b = p
        return a * np.exp(-((x / T) ** nexp)) + b
    if model == "gaussian_sinusoid":
        a, T, f, phi, b = p
        return a * np.exp(-((x / T) ** 2)) * np.cos(2 * np.pi * f * x + phi) + b
    if model == "sin_squared":
        (a,) = p
        return a * np.sin(x / 2.0) ** 2
    raise ValueError(f"unknown model {model!r}; choose from {_FIT_MODELS}")


def _fit_names(model):
    return {
        "exponential": ("a", "T", "b"),
        "stretched": ("a", "T", "n", "b"),
        "gaussian_sinusoid": ("a", "T", "f", "phi", "b"),
        "sin_squared": ("a",),
    }[model]


def _initial_guess(model, x, y):
    b0 = float(y[-1])
    a0 = float(y[0] - b0)
    if a0 == 0.0:
        a0 = max(float(np.ptp(y)), 1e-6)
    # time where the decay has fallen to 1/e of its initial excursion
    target = b0 + a0 / np.e
    idx = np.argmin(np.abs(y - target))
    T0 = float(x[idx]) if x[idx] > 0 else float(x[-1]) / 2
    if T0 <= 0:
        T0 = float(np.max(x)) or 1.0
    if model == "exponential":
        return [a0, T0, b0]
    if model == "stretched":
        return [a0, T0, 1.2, b0]
    if model == "gaussian_sinusoid":
        yc = y - y.mean()
        dt = x[1] - x[0]
        spec = np.abs(np.fft.rfft(yc))
        freqs = np.fft.rfftfreq(len(x), dt)
        f0 = float(freqs[np.argmax(spec[1:]) + 1]) if len(spec) > 1 else 1.0 / (x[-1] - x[0])
        return [float(np.ptp(y)) / 2, float(x[-1]) / 2, f0, 0.0, float(y.mean())]
    if model == "sin_squared":
        return [float(np.max(y))]
    raise ValueError(model)


def fit_decay(trace, model: str = "exponential", p0=None) -> FitResult:
    """Nonlinear least squares on a SignalTrace (or (x, y) pair).

    Deterministic for identical input; non-convergence is reported via the
    converged flag with the best iterate retained.
    """
    if isinstance(trace, SignalTrace):
        x, y = np.asarray(trace.x, float), np.asarray(trace.y, float)
    else:
        x, y = (np.asarray(v, float) for v in trace)
    names = _fit_names(model)
    if len(x) < len(names) + 4:
        raise ValueError(f"need at least {len(names) + 4} points to fit {model!r}")
    if p0 is None:
        p0 = _initial_guess(model, x, y)

    res = least_squares(lambda p: _fit_eval(model, x, p) - y, p0, method="lm",
                        max_nfev=20000)
    params = dict(zip(names, (float(v) for v in res.x)))
    dof = max(len(x) - len(names), 1)
    try:
        jtj = res.jac.T @ res.jac
        cov = np.linalg.inv(jtj) * 2 * res.cost / dof
        sig = np.sqrt(np.maximum(np.diag(cov), 0.0))
    except np.linalg.LinAlgError:
        sig = np.full(len(names), np.nan)
    sigmas = dict(zip(names, (float(v) for v in sig)))
    return FitResult(model=model, params=params, sigmas=sigmas,
                     residual_norm=float(np.sqrt(2 * res.cost)), converged=bool(res.success))
