"""
Prometheus metrics instrumentation.
Counts the expensive parts of the exact analysis (interval refinement,
branch enumeration) and times the top-level operations.
"""
from prometheus_client import CollectorRegistry, Counter, Histogram, Info, write_to_textfile
import time
from functools import wraps

from app.core.config import get_settings

registry = CollectorRegistry()

# Exact arithmetic metrics
interval_refinements_total = Counter(
    'betamorph_interval_refinements_total',
    'Bisection steps applied to isolating intervals of beta',
    registry=registry
)

comparisons_total = Counter(
    'betamorph_comparisons_total',
    'Exact comparisons of field elements',
    ['resolution'],
    registry=registry
)

# Branch enumeration metrics
branches_enumerated_total = Counter(
    'betamorph_branches_enumerated_total',
    'Intervals of monotonicity produced by iterate decompositions',
    ['orientation'],
    registry=registry
)

# Verdict metrics
verdicts_total = Counter(
    'betamorph_verdicts_total',
    'Isomorphism verdicts produced',
    ['tag'],
    registry=registry
)

analysis_duration_seconds = Histogram(
    'betamorph_analysis_duration_seconds',
    'Duration of analysis operations',
    ['operation'],
    registry=registry
)

analysis_errors_total = Counter(
    'betamorph_analysis_errors_total',
    'Analysis operations that raised',
    ['operation', 'error_type'],
    registry=registry
)

app_info = Info('betamorph', 'Analyzer information', registry=registry)
app_info.info({
    'version': get_settings().APP_VERSION,
    'name': get_settings().APP_NAME
})


def track_analysis(operation: str):
    """
    Decorator to time an analysis operation and count its failures.

    Usage:
        @track_analysis("decompose")
        def decompose(...):
            ...
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            if not get_settings().ENABLE_METRICS:
                return func(*args, **kwargs)

            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
                analysis_duration_seconds.labels(operation=operation).observe(
                    time.perf_counter() - start_time
                )
                return result
            except Exception as e:
                analysis_errors_total.labels(
                    operation=operation,
                    error_type=type(e).__name__
                ).inc()
                raise

        return wrapper
    return decorator


def write_metrics(path: str) -> None:
    """Dump the registry in the Prometheus text format (node-exporter textfile style)."""
    write_to_textfile(path, registry)
