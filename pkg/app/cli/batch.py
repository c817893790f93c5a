"""
Batch certification (--beta-list).

Every beta runs in a worker thread; at most BATCH_WORKERS run at once and the
results come back in input order.
"""
import asyncio
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from app.cli.errors import EXIT_INTERNAL, EXIT_OK, error_report, exit_code_for
from app.cli.output import Renderable
from app.core.config import get_settings
from app.exceptions import BetamorphException, InvalidArgumentException
from app.schemas.common import RunConfig
from app.services.algebra import parse_beta
from app.services.analysis import AnalysisService
from app.services.converters import ReportConverter
from app.services.monotonicity import VerdictTag

logger = logging.getLogger(__name__)


def read_beta_list(path: str) -> List[str]:
    """One beta spec per line; blank lines and '#' comments are skipped."""
    specs = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            specs.append(line)
    if not specs:
        raise InvalidArgumentException(f"{path} lists no beta specs")
    return specs


def certify_one(spec: str, forced_n: Optional[int] = None, digits: Optional[int] = None) -> Tuple[Renderable, int]:
    """Verdict report for one spec, or an error report; never raises."""
    try:
        field = parse_beta(spec)
        service = AnalysisService(field, digits)
        result, verdict = service.certify(forced_n)
        config = RunConfig(
            command="certify",
            n=forced_n,
            digits=service.digits,
            precision_limit=field.precision_limit,
        )
        code = EXIT_INTERNAL if verdict.tag == VerdictTag.INCONCLUSIVE else EXIT_OK
        return ReportConverter.envelope(field, config, result), code
    except BetamorphException as e:
        logger.error(f"certify failed for {spec}: {e}", extra={"error_type": type(e).__name__})
        return error_report(spec, e), exit_code_for(e)
    except Exception as e:
        logger.exception(f"certify failed unexpectedly for {spec}: {e}")
        return error_report(spec, e), EXIT_INTERNAL


async def certify_batch(
    specs: List[str],
    forced_n: Optional[int] = None,
    digits: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[Tuple[Renderable, int]]:
    workers = workers or get_settings().BATCH_WORKERS
    semaphore = asyncio.Semaphore(workers)

    async def run(spec: str) -> Tuple[Renderable, int]:
        async with semaphore:
            return await asyncio.to_thread(certify_one, spec, forced_n, digits)

    logger.info(f"Certifying {len(specs)} beta values with {workers} workers")
    return list(await asyncio.gather(*(run(spec) for spec in specs)))
