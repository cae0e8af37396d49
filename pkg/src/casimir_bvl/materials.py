"""Dielectric permittivity models on the real and imaginary frequency axes.

All models are expressed in Gaussian conventions: the permittivity is
dimensionless and the dc conductivity of an ohmic conductor is
``sigma_0 = omega_p**2 / (4 pi gamma)`` (units of rad/s).  Frequencies are
rad/s throughout.  Tabulated data live on the positive imaginary axis only,
which is the form consumed by Matsubara evaluation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np


class MaterialError(Exception):
    """Base class for material-model errors."""


class EvalAtZero(MaterialError):
    """The model is singular at zero frequency."""


class IdealMetalHasNoEpsilon(MaterialError):
    """The ideal metal is defined by its reflection coefficients, not eps."""


class TabulatedOutOfRange(MaterialError):
    """Tabulated models are defined on the imaginary axis only."""


class EmptyTable(MaterialError):
    """A tabulated model needs at least two data points."""


class Kind(enum.Enum):
    INSULATOR = "insulator"
    DRUDE = "drude"
    PLASMA = "plasma"
    GENERALIZED_PLASMA = "gplasma"
    IDEAL_METAL = "ideal"
    TABULATED = "table"


class Extrapolation(enum.Enum):
    """Low-frequency continuation class of a tabulated model."""

    DRUDE_LIKE = "drude-like"
    PLASMA_LIKE = "plasma-like"
    FINITE = "finite"


class ZeroFreqClass(enum.Enum):
    """Behavior of eps(omega) as omega -> 0."""

    FINITE = "finite"
    INVERSE_OMEGA = "inverse-omega"
    INVERSE_OMEGA_SQUARED = "inverse-omega-squared"
    IDEAL = "ideal"


@dataclass(frozen=True)
class Oscillator:
    """Single interband oscillator term g / (w0^2 - w^2 - i gamma w)."""

    strength: float  # rad^2/s^2
    center: float    # rad/s
    width: float     # rad/s

    def __post_init__(self):
        if self.strength <= 0 or self.center <= 0 or self.width <= 0:
            raise ValueError("oscillator parameters must be positive")


@dataclass(frozen=True)
class MaterialModel:
    """Immutable description of a dielectric response.

    Use the factory functions :func:`insulator`, :func:`drude`,
    :func:`plasma`, :func:`generalized_plasma`, :func:`ideal_metal` and
    :func:`tabulated` rather than the constructor.
    """

    kind: Kind
    eps0: float = 0.0
    omega_p: float = 0.0
    gamma: float = 0.0
    oscillators: tuple = ()
    table: tuple = ()
    extrapolation: Extrapolation | None = None

    def __post_init__(self):
        k = self.kind
        if k is Kind.INSULATOR and self.eps0 < 1.0:
            raise ValueError("insulator requires eps0 >= 1")
        if k in (Kind.DRUDE, Kind.PLASMA, Kind.GENERALIZED_PLASMA) and self.omega_p <= 0:
            raise ValueError("omega_p must be positive")
        if k is Kind.DRUDE and self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if k is Kind.TABULATED:
            if len(self.table) < 2:
                raise EmptyTable("tabulated model needs >= 2 points")
            xi = [p[0] for p in self.table]
            eps = [p[1] for p in self.table]
            if any(b <= a for a, b in zip(xi, xi[1:])):
                raise ValueError("table frequencies must be strictly increasing")
            if any(e < 1.0 for e in eps) or xi[0] <= 0:
                raise ValueError("table requires xi > 0 and eps(i xi) >= 1")
            if self.extrapolation is None:
                raise ValueError("tabulated model needs an extrapolation tag")
            if self.extrapolation is not Extrapolation.FINITE and eps[0] <= eps[1]:
                raise ValueError(
                    "singular extrapolation needs eps decreasing at the low end")


def insulator(eps0, oscillators=()):
    return MaterialModel(Kind.INSULATOR, eps0=float(eps0),
                         oscillators=tuple(oscillators))


def drude(omega_p, gamma):
    return MaterialModel(Kind.DRUDE, omega_p=float(omega_p), gamma=float(gamma))


def plasma(omega_p):
    return MaterialModel(Kind.PLASMA, omega_p=float(omega_p))


def generalized_plasma(omega_p, oscillators=()):
    return MaterialModel(Kind.GENERALIZED_PLASMA, omega_p=float(omega_p),
                         oscillators=tuple(oscillators))


def ideal_metal():
    return MaterialModel(Kind.IDEAL_METAL)


def tabulated(table, extrapolation):
    table = tuple((float(x), float(e)) for x, e in table)
    return MaterialModel(Kind.TABULATED, table=table, extrapolation=extrapolation)


def dc_conductivity(model):
    """dc conductivity sigma_0 = omega_p^2/(4 pi gamma) of a Drude model, rad/s."""
    if model.kind is not Kind.DRUDE:
        raise ValueError("dc conductivity is defined for Drude models only")
    return model.omega_p ** 2 / (4.0 * math.pi * model.gamma)


def _osc_sum_imag(oscillators, xi):
    return sum(o.strength / (o.center ** 2 + xi * xi + o.width * xi)
               for o in oscillators)


def _osc_sum_real(oscillators, w):
    return sum(o.strength / (o.center ** 2 - w * w - 1j * o.width * w)
               for o in oscillators)


def eval_epsilon(model, w):
    """Evaluate eps(w) on the real axis or the positive imaginary axis.

    Parameters
    ----------
    model : MaterialModel
    w : complex
        Frequency in rad/s.  Either purely real (nonzero for singular
        models) or purely imaginary with positive imaginary part.

    Returns
    -------
    complex
        On the imaginary axis the result has exactly zero imaginary part.
    """
    if model.kind is Kind.IDEAL_METAL:
        raise IdealMetalHasNoEpsilon("ideal metal has no permittivity")
    w = complex(w)
    if w.real == 0.0 and w.imag > 0.0:
        return complex(_eval_imag_axis(model, w.imag), 0.0)
    if w.imag == 0.0:
        return _eval_real_axis(model, w.real)
    raise ValueError("frequency must lie on the real or positive imaginary axis")


def _eval_imag_axis(model, xi):
    k = model.kind
    if k is Kind.INSULATOR:
        return model.eps0 + _osc_sum_imag(model.oscillators, xi)
    if k is Kind.DRUDE:
        if xi == 0.0:
            raise EvalAtZero("Drude model is singular at zero frequency")
        return 1.0 + model.omega_p ** 2 / (xi * (xi + model.gamma))
    if k is Kind.PLASMA:
        if xi == 0.0:
            raise EvalAtZero("plasma model is singular at zero frequency")
        return 1.0 + (model.omega_p / xi) ** 2
    if k is Kind.GENERALIZED_PLASMA:
        if xi == 0.0:
            raise EvalAtZero("plasma model is singular at zero frequency")
        return (1.0 + (model.omega_p / xi) ** 2
                + _osc_sum_imag(model.oscillators, xi))
    if k is Kind.TABULATED:
        if xi == 0.0:
            if model.extrapolation is Extrapolation.FINITE:
                return model.table[0][1]
            raise EvalAtZero("tabulated extrapolation is singular at zero")
        return eval_epsilon_tabulated(model, xi)
    raise AssertionError(k)


def _eval_real_axis(model, w):
    k = model.kind
    if w == 0.0 and k is not Kind.INSULATOR:
        raise EvalAtZero("model is singular (or undefined) at omega = 0")
    if k is Kind.INSULATOR:
        return model.eps0 + _osc_sum_real(model.oscillators, w)
    if k is Kind.DRUDE:
        return 1.0 - model.omega_p ** 2 / (w * (w + 1j * model.gamma))
    if k is Kind.PLASMA:
        return complex(1.0 - (model.omega_p / w) ** 2, 0.0)
    if k is Kind.GENERALIZED_PLASMA:
        return (1.0 - (model.omega_p / w) ** 2
                + _osc_sum_real(model.oscillators, w))
    if k is Kind.TABULATED:
        raise TabulatedOutOfRange("tabulated models are imaginary-axis only")
    raise AssertionError(k)


def eval_epsilon_tabulated(model, xi):
    """Interpolate a tabulated eps(i xi).

    Log-log linear inside the table range; below the lowest node the
    continuation follows the extrapolation tag (A/xi, B/xi^2 or constant,
    with A or B fitted to the two lowest nodes); above the range
    eps -> 1 + C/xi^2 fitted at the top node.
    """
    if model.kind is not Kind.TABULATED:
        raise ValueError("eval_epsilon_tabulated requires a tabulated model")
    if len(model.table) < 2:
        raise EmptyTable("tabulated model needs >= 2 points")
    if xi <= 0:
        raise ValueError("xi must be positive")
    xs = np.array([p[0] for p in model.table])
    es = np.array([p[1] for p in model.table])
    if xi < xs[0]:
        e1, e2 = es[0], es[1]
        x1, x2 = xs[0], xs[1]
        tag = model.extrapolation
        if tag is Extrapolation.DRUDE_LIKE:
            a = (e1 - e2) / (1.0 / x1 - 1.0 / x2)
            return e1 + a * (1.0 / xi - 1.0 / x1)
        if tag is Extrapolation.PLASMA_LIKE:
            b = (e1 - e2) / (1.0 / x1 ** 2 - 1.0 / x2 ** 2)
            return e1 + b * (1.0 / xi ** 2 - 1.0 / x1 ** 2)
        return float(e1)
    if xi > xs[-1]:
        c = (es[-1] - 1.0) * xs[-1] ** 2
        return 1.0 + c / xi ** 2
    lny = np.interp(math.log(xi), np.log(xs), np.log(es))
    return float(math.exp(lny))


def zero_freq_class(model):
    """Classify the omega -> 0 behavior of the model."""
    k = model.kind
    if k is Kind.INSULATOR:
        return ZeroFreqClass.FINITE
    if k is Kind.DRUDE:
        return ZeroFreqClass.INVERSE_OMEGA
    if k in (Kind.PLASMA, Kind.GENERALIZED_PLASMA):
        return ZeroFreqClass.INVERSE_OMEGA_SQUARED
    if k is Kind.IDEAL_METAL:
        return ZeroFreqClass.IDEAL
    tag = model.extrapolation
    if tag is Extrapolation.DRUDE_LIKE:
        return ZeroFreqClass.INVERSE_OMEGA
    if tag is Extrapolation.PLASMA_LIKE:
        return ZeroFreqClass.INVERSE_OMEGA_SQUARED
    return ZeroFreqClass.FINITE


def effective_omega_p(model):
    """Plasma frequency governing the xi^-2 singularity, rad/s.

    For tabulated plasma-like models this is the square root of the
    coefficient fitted to the two lowest table nodes.
    """
    if model.kind in (Kind.PLASMA, Kind.GENERALIZED_PLASMA):
        return model.omega_p
    if (model.kind is Kind.TABULATED
            and model.extrapolation is Extrapolation.PLASMA_LIKE):
        (x1, e1), (x2, e2) = model.table[0], model.table[1]
        b = (e1 - e2) / (1.0 / x1 ** 2 - 1.0 / x2 ** 2)
        return math.sqrt(b)
    raise ValueError("model has no inverse-omega-squared singularity")


def static_epsilon(model):
    """Static permittivity eps(0) of a finite-class model."""
    if zero_freq_class(model) is not ZeroFreqClass.FINITE:
        raise ValueError("static permittivity requires a finite-class model")
    if model.kind is Kind.INSULATOR:
        return model.eps0 + sum(o.strength / o.center ** 2
                                for o in model.oscillators)
    return model.table[0][1]


def load_table(path):
    """Read imaginary-axis permittivity data from a text file.

    Lines starting with ``#`` are comments; data lines are
    ``xi_rad_per_s  eps_value`` separated by whitespace.
    """
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"malformed table line: {line!r}")
            rows.append((float(fields[0]), float(fields[1])))
    if len(rows) < 2:
        raise EmptyTable(f"{path}: need at least two data points")
    return rows
