"""Engine selection: compiled kernels when available, pure Python otherwise.

The two engines are interchangeable and bit-identical; the compiled one is
just fast.  Selection happens once at import; override with the environment
variable ``F4M_BACKEND=python|compiled`` or per call via ``backend=`` keyword
arguments on the public entry points.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pyloop

__all__ = ["Backend", "get_backend", "available_backends", "default_backend_name"]

try:
    from . import _kernels

    _HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on the build
    _kernels = None
    _HAVE_COMPILED = False


class Backend:
    """Uniform facade over one engine implementation."""

    def __init__(self, name: str):
        if name not in ("python", "compiled"):
            raise ValueError(f"unknown backend {name!r}")
        if name == "compiled" and not _HAVE_COMPILED:
            raise RuntimeError("compiled kernels are not available in this build")
        self.name = name

    def evaluate_batch(self, desc, xs) -> np.ndarray:
        if self.name == "compiled" and desc.is_native:
            return _kernels.evaluate_batch(desc, xs)
        return _pyloop.evaluate_batch(desc, xs)

    def run_generations(self, desc, pop_x, pop_f, v, arch_x, arch_f, u, hist_min,
                        rng, n_gens, eta_c, eta_m, p_c, p_m,
                        use_archive, use_p, debug) -> int:
        impl = _kernels if self.name == "compiled" else _pyloop
        return impl.run_generations(
            desc, pop_x, pop_f, v, arch_x, arch_f, u, hist_min, rng, n_gens,
            eta_c, eta_m, p_c, p_m, use_archive, use_p, debug,
        )

    def fast_removal(self, pop_f, v, off_f, u_rem):
        impl = _kernels if self.name == "compiled" else _pyloop
        return impl.fast_removal(pop_f, v, off_f, u_rem)

    def __repr__(self) -> str:
        return f"Backend({self.name!r})"


_BACKENDS: dict[str, Backend] = {"python": Backend("python")}
if _HAVE_COMPILED:
    _BACKENDS["compiled"] = Backend("compiled")


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def default_backend_name() -> str:
    forced = os.environ.get("F4M_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise RuntimeError(
                f"F4M_BACKEND={forced!r} requested but only {available_backends()} available"
            )
        return forced
    return "compiled" if _HAVE_COMPILED else "python"


def get_backend(name: str | None = None) -> Backend:
    if name is None:
        name = default_backend_name()
    if isinstance(name, Backend):
        return name
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; available: {available_backends()}"
        ) from None
