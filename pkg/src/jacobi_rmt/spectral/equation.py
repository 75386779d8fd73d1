"""The spectral curve ``P(w, x) = w^{r+1} - x (w - a)(w + 1)^s``."""

from __future__ import annotations

from math import comb

import numpy as np

from ..moments import ModelParams


class SpectralCurve:
    """Evaluation helpers for one parameter triple.

    Values and derivatives are computed from the factored form, which stays
    accurate when ``w`` and ``x`` are tiny; expanded coefficients are only
    used to hand the polynomial to the root solver.
    """

    def __init__(self, params: ModelParams):
        self.params = params
        self.r = params.r
        self.s = params.s
        self.a = float(params.a)
        # (w - a)(w + 1)^s, lowest degree first
        binom = np.array([comb(self.s, k) for k in range(self.s + 1)], dtype=float)
        q = np.zeros(self.s + 2)
        q[1:] += binom
        q[:-1] -= self.a * binom
        self._q_low = q

    def value(self, w, x):
        return w ** (self.r + 1) - x * (w - self.a) * (w + 1) ** self.s

    def d_dw(self, w, x):
        r, s, a = self.r, self.s, self.a
        inner = (w + 1) ** s
        if s:
            inner = inner + s * (w - a) * (w + 1) ** (s - 1)
        return (r + 1) * w ** r - x * inner

    def d_dx(self, w, x):
        return -(w - self.a) * (w + 1) ** self.s

    def residual(self, w, x) -> float:
        """``|P(w, x)|``."""
        return float(abs(self.value(w, x)))

    def relative_residual(self, w, x) -> float:
        """``|P|`` divided by the sum of the magnitudes of its two terms."""
        aw = abs(w)
        scale = aw ** (self.r + 1) + abs(x) * abs(w - self.a) * abs(w + 1) ** self.s
        if scale == 0:
            return 0.0
        return float(abs(self.value(w, x)) / scale)

    def scaled_coefficients(self, x, sigma: float) -> np.ndarray:
        """Coefficients (highest first) of ``P(sigma v, x) / sigma^{r+1}`` in ``v``.

        Scaling by the current root magnitude keeps every root of order one
        even when ``x`` (and with it ``w``) is extremely close to zero.
        """
        deg = self.r + 1
        low = np.zeros(deg + 1, dtype=complex)
        low[deg] = 1.0
        powers = sigma ** np.arange(len(self._q_low), dtype=float)
        factor = x / sigma ** deg
        low[: len(self._q_low)] -= factor * self._q_low * powers
        return low[::-1]

    def f_of_w(self, w):
        """Inverse map ``x = w^{r+1} / ((w - a)(w + 1)^s)``."""
        return w ** (self.r + 1) / ((w - self.a) * (w + 1) ** self.s)
