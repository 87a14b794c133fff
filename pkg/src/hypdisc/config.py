"""Numerical tolerances, overridable through environment variables.

Every tolerance used by the package lives here so that all modules agree on
what "equal", "on the boundary" or "a valid relation" means.  Each field can
be overridden by exporting ``HYPDISC_<FIELD>`` (for example
``HYPDISC_TOL_REL=1e-10``) before the package is imported.
"""

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Tolerances:
    tol_iso: float = 1e-9    # isotropy band for |<p,p>| (relative)
    tol_geo: float = 1e-9    # incidence with a geodesic
    tol_sep: float = 1e-9    # projective point separation
    tol_rel: float = 1e-8    # entrywise residual of a reflection relation
    tol_cls: float = 1e-7    # band around |trace| = 2 for classification
    tol_side: float = 1e-7   # margin for strict side-of-geodesic decisions
    coincide: float = 1e-7   # adjacent-center coincidence for cancellations
    area_tol: float = 1e-6   # area comparisons (quantization, additivity)
    rounds_per_center: int = 10  # reduction loop guard: max_rounds = 10 n

    @classmethod
    def from_env(cls):
        kwargs = {}
        for f in fields(cls):
            raw = os.environ.get(f"HYPDISC_{f.name.upper()}")
            if raw is not None:
                kwargs[f.name] = f.type(raw) if isinstance(f.type, type) else float(raw)
        return cls(**kwargs)


TOL = Tolerances.from_env()


def maximality_tol(n: int) -> float:
    """Area tolerance for maximality scales with the number of centers."""
    return TOL.area_tol * n
