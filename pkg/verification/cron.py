"""
Nightly regression sweep over every check.
Runs daily at 12 AM (configured in settings.CRONJOBS).
"""
import logging

from .checks import CheckRunner
from .reporting import summary_line

logger = logging.getLogger(__name__)


def nightly_run_all():
    """
    Run every check at the default order.
    This function is called by the cron job.
    """
    reports = CheckRunner().run_all()
    summary = summary_line(reports)
    if all(report.passed for report in reports):
        logger.info("nightly sweep: %s", summary)
    else:
        logger.error("nightly sweep: %s", summary)
    print(f"Cron job completed: {summary}")
    return summary
