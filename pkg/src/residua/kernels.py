"""Kernel backend selection.

The hot table kernels exist twice: a Cython extension (residua._kernels)
and a pure-Python mirror (residua._kernels_py).  The compiled one is taken
when the import succeeds; everything downstream goes through this module so
the choice is made exactly once.  ``load_backend`` exposes both for the
parity tests and the benchmark.
"""

from __future__ import annotations

try:
    from residua import _kernels as _impl
except ImportError:  # extension not built; fall back
    from residua import _kernels_py as _impl

BACKEND = _impl.BACKEND_NAME

ring_axiom_witness = _impl.ring_axiom_witness
action_axiom_witness = _impl.action_axiom_witness
units_scan = _impl.units_scan
closure_subring = _impl.closure_subring
closure_ideal = _impl.closure_ideal
hom_scan = _impl.hom_scan
propagate_partial_hom = _impl.propagate_partial_hom


def load_backend(name: str):
    """Return the named kernel module ('cython' or 'python')."""
    if name == "python":
        from residua import _kernels_py

        return _kernels_py
    if name == "cython":
        from residua import _kernels

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")
