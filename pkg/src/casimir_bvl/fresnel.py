"""Wavevector kinematics and Fresnel reflection coefficients.

Branch convention: every square root of a complex radicand is taken with
non-negative imaginary part, so that evanescent waves decay away from the
interface.  On the imaginary frequency axis all coefficients are real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import materials
from .constants import C
from .materials import (IdealMetalHasNoEpsilon, Kind, ZeroFreqClass,
                        effective_omega_p, static_epsilon, zero_freq_class)
from .quadrature import DegenerateSweep, fit_power_law


class ZeroFrequency(Exception):
    """reflection() is undefined at omega = 0; use reflection_static()."""


@dataclass(frozen=True)
class WaveKinematics:
    omega: complex   # rad/s
    k_perp: float    # 1/m
    k0: complex      # omega/c, 1/m
    k_z: complex     # normal wavevector in vacuum, 1/m
    s: complex       # normal wavevector inside the medium, 1/m


@dataclass(frozen=True)
class ReflectionSet:
    r_te: complex
    r_tm: complex
    r_bar: complex


IDEAL_REFLECTION = ReflectionSet(complex(-1.0), complex(1.0), complex(1.0))


def branch_sqrt(z):
    """Complex square root with Im >= 0.

    A real negative radicand maps exactly onto +i*sqrt(|z|); otherwise the
    principal root is taken and its sign flipped if the imaginary part is
    negative.  Accepts scalars or ndarrays.
    """
    z = np.asarray(z, dtype=complex)
    r = np.sqrt(z)
    r = np.where(r.imag < 0.0, -r, r)
    neg_real = (z.imag == 0.0) & (z.real < 0.0)
    if np.any(neg_real):
        r = np.where(neg_real, 1j * np.sqrt(np.where(neg_real, -z.real, 1.0)), r)
    if r.ndim == 0:
        return complex(r)
    return r


def kinematics(omega, k_perp, eps):
    """Wavevector components at frequency omega and transverse wavenumber k_perp.

    eps is the medium permittivity; vacuum values use eps = 1.
    """
    if k_perp < 0:
        raise ValueError("k_perp must be non-negative")
    omega = complex(omega)
    k0 = omega / C
    if omega == 0 and k_perp == 0:
        return WaveKinematics(omega, k_perp, k0, 0j, 0j)
    k0sq = k0 * k0
    k_z = branch_sqrt(k0sq - k_perp * k_perp)
    s = branch_sqrt(eps * k0sq - k_perp * k_perp)
    return WaveKinematics(omega, k_perp, k0, k_z, s)


def imag_axis_coefficients(eps, xi, k_perp):
    """TE/TM coefficients at omega = i*xi for a real eps(i xi).

    Pure real arithmetic: both normal wavevectors are i*q and i*kappa, and
    the common factor i cancels.  k_perp may be an ndarray.
    """
    q = np.sqrt(k_perp * k_perp + (xi / C) ** 2)
    kappa = np.sqrt(k_perp * k_perp + eps * (xi / C) ** 2)
    r_te = (q - kappa) / (q + kappa)
    r_tm = (eps * q - kappa) / (eps * q + kappa)
    return r_te, r_tm


def reflection(model, omega, k_perp):
    """Fresnel reflection set (r_te, r_tm, r_bar) at a nonzero frequency.

    omega may be real or purely imaginary (positive imaginary part).  On the
    imaginary axis all three coefficients are exactly real.
    """
    omega = complex(omega)
    if omega == 0:
        raise ZeroFrequency("use reflection_static for the omega -> 0 limit")
    if model.kind is Kind.IDEAL_METAL:
        return IDEAL_REFLECTION
    eps = materials.eval_epsilon(model, omega)
    if omega.real == 0.0:
        r_te, r_tm = imag_axis_coefficients(eps.real, omega.imag, k_perp)
        r_bar = (eps.real - 1.0) / (eps.real + 1.0)
        return ReflectionSet(complex(r_te), complex(r_tm), complex(r_bar))
    kin = kinematics(omega, k_perp, eps)
    r_te = (kin.k_z - kin.s) / (kin.k_z + kin.s)
    r_tm = (eps * kin.k_z - kin.s) / (eps * kin.k_z + kin.s)
    r_bar = (eps - 1.0) / (eps + 1.0)
    return ReflectionSet(r_te, r_tm, r_bar)


def static_rte(model, k_perp):
    """Zero-frequency TE coefficient; k_perp may be an ndarray."""
    cls = zero_freq_class(model)
    if cls is ZeroFreqClass.IDEAL:
        return np.full_like(np.asarray(k_perp, dtype=float), -1.0) \
            if np.ndim(k_perp) else -1.0
    if cls is ZeroFreqClass.INVERSE_OMEGA_SQUARED:
        kp2 = (effective_omega_p(model) / C) ** 2
        kappa = np.sqrt(k_perp * k_perp + kp2)
        return (k_perp - kappa) / (k_perp + kappa)
    return np.zeros_like(np.asarray(k_perp, dtype=float)) \
        if np.ndim(k_perp) else 0.0


def reflection_static(model, k_perp):
    """Exact omega -> 0 limits of the three reflection coefficients.

    TE vanishes for finite and Drude-like (1/omega) models, stays finite
    for plasma-like (1/omega^2) models and is -1 for the ideal metal; TM
    and the scalar coefficient go to 1 for all conductors and to
    (eps0-1)/(eps0+1) for finite-class models.
    """
    if k_perp <= 0:
        raise ValueError("k_perp must be positive")
    cls = zero_freq_class(model)
    if cls is ZeroFreqClass.IDEAL:
        return IDEAL_REFLECTION
    r_te = complex(static_rte(model, k_perp))
    if cls is ZeroFreqClass.FINITE:
        eps0 = static_epsilon(model)
        r_bar = (eps0 - 1.0) / (eps0 + 1.0)
        return ReflectionSet(r_te, complex(r_bar), complex(r_bar))
    return ReflectionSet(r_te, complex(1.0), complex(1.0))


def tm_scalar_gap(model, k_perp, omega_sweep):
    """Fitted power-law exponent of |r_tm(omega) - r_bar(omega)| as omega -> 0.

    A positive exponent certifies that the TM coefficient approaches the
    scalar-cavity coefficient at zero frequency.
    """
    if model.kind is Kind.IDEAL_METAL:
        raise IdealMetalHasNoEpsilon(
            "r_tm - r_bar is identically zero for the ideal metal")
    if len(omega_sweep) < 3:
        raise DegenerateSweep("need at least 3 sweep frequencies")
    pts = []
    for w in omega_sweep:
        refl = reflection(model, w, k_perp)
        pts.append((w, abs(refl.r_tm - refl.r_bar)))
    exponent, _ = fit_power_law(pts)
    return exponent
