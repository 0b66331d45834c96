import logging

from ..config import settings

logger = logging.getLogger("branchcover")

if not logger.handlers:
    handler = logging.StreamHandler()
    handler.setFormatter(
        logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    )
    logger.addHandler(handler)

logger.setLevel(settings.LOG_LEVEL.upper())
