from __future__ import annotations

import numpy as np

from .errors import EstimationError


def loglog_ols(x, y) -> tuple[float, float, float]:
    """Ordinary least squares of ``log y`` on ``log x``.

    Returns ``(slope, intercept, r_squared)``. A perfectly flat or perfectly
    straight input reports ``r_squared = 1``.
    """
    x = np.log(np.asarray(x, dtype=float))
    y = np.log(np.asarray(y, dtype=float))
    if len(x) < 2 or np.ptp(x) == 0:
        raise EstimationError(f"need at least 2 distinct abscissae, got {len(x)} points")
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_res = float(resid @ resid)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    if ss_tot <= 1e-300:
        r2 = 1.0
    else:
        r2 = max(0.0, 1.0 - ss_res / ss_tot)
    if ss_res < 1e-24 * max(1.0, ss_tot):
        r2 = 1.0
    return float(slope), float(intercept), r2
