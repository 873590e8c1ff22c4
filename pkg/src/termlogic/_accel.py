"""Pick the compiled enumeration kernel when it was built, else the Python one."""

try:
    from ._mckernel import count_models, first_model

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._mcpure import count_models, first_model

    BACKEND = "python"

__all__ = ["BACKEND", "count_models", "first_model"]
