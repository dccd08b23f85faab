"""
Utility decorators for input validation and structured logging.
"""

import functools
from collections.abc import Callable
from typing import Any

from src.core.exceptions.verification import ValidationError
from src.core.utils.validation import validate_positive

# Parameters that must be strictly positive wherever they appear
POSITIVE_PARAMETERS = frozenset({"N", "Q", "X", "B", "scale", "y", "x_max", "samples_per_r"})

# Parameters copied into the log context
LOGGED_PARAMETERS = frozenset(
    {"p", "r", "q", "a", "b", "m", "n", "N", "Q", "X", "B", "j", "k", "ell", "y", "index"}
)


def validate_inputs[F: Callable[..., Any]](func: F) -> F:
    """Decorator to automatically validate common numeric inputs.

    Validates:
    - N, Q, X, B, scale, y: Must be positive

    Usage:
        @validate_inputs
        def dyadic_sum_S(form, chi, N: int, window) -> complex:
            # Validation handled automatically
            ...

    Raises:
        ValidationError: If any input is invalid
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        import inspect

        sig = inspect.signature(func)
        bound_args = sig.bind(*args, **kwargs)
        bound_args.apply_defaults()

        for param_name, value in bound_args.arguments.items():
            if param_name in POSITIVE_PARAMETERS and isinstance(value, int | float):
                try:
                    validate_positive(value, param_name)
                except ValidationError as e:
                    raise ValidationError(f"Invalid {param_name}: {e}") from e

        return func(*bound_args.args, **bound_args.kwargs)

    return wrapper  # type: ignore


def _summarize(value: Any) -> Any:
    """Reduce a value to something JSON-friendly for the log context."""
    if hasattr(value, "value") and hasattr(value, "name"):
        return str(value.value)
    if isinstance(value, bool | int | float | str):
        return value
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j"
    return type(value).__name__


def log_verification[F: Callable[..., Any]](func: F) -> F:
    """Decorator to log verification operations with structured context.

    Logs entry and exit with a correlation ID, the numeric parameters of the
    case, the execution time and, for reports, the pass/fail outcome.

    Usage:
        @log_verification
        def voronoi_verify(form, a: int, q: int, h) -> VerificationReport:
            # Logging handled automatically with correlation ID
            ...
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        # Import here to avoid circular imports
        import inspect
        import time
        import uuid

        from loguru import logger

        correlation_id = str(uuid.uuid4())[:8]
        func_name = func.__name__
        context: dict[str, Any] = {"correlation_id": correlation_id}

        sig = inspect.signature(func)
        bound_args = sig.bind(*args, **kwargs)
        bound_args.apply_defaults()
        for param_name, value in bound_args.arguments.items():
            if param_name in LOGGED_PARAMETERS:
                context[param_name] = _summarize(value)

        start_time = time.perf_counter()
        logger.debug(f"Verification started: {func_name}", extra=context)

        try:
            result = func(*args, **kwargs)
        except Exception as e:
            execution_time_ms = (time.perf_counter() - start_time) * 1000
            error_context = {
                **context,
                "success": False,
                "execution_time_ms": round(execution_time_ms, 2),
                "error_type": type(e).__name__,
                "error_message": str(e),
            }
            logger.error(f"Verification failed: {func_name}: {e}", extra=error_context)
            raise

        execution_time_ms = (time.perf_counter() - start_time) * 1000
        success_context = {
            **context,
            "success": True,
            "execution_time_ms": round(execution_time_ms, 2),
            "result_type": type(result).__name__,
        }
        passed = getattr(result, "passed", getattr(result, "satisfied", None))
        if isinstance(passed, bool):
            success_context["passed"] = passed
        elif isinstance(result, bool | int | float | str | complex):
            success_context["result"] = _summarize(result)

        if passed is False:
            logger.warning(f"Verification did not pass: {func_name}", extra=success_context)
        else:
            logger.success(f"Verification completed: {func_name}", extra=success_context)
        return result

    return wrapper  # type: ignore
