import sys

from loguru import logger

from common.config.base_config import base_settings

logger.remove()
logger.add(
    sys.stderr,
    level=base_settings.LOG_LEVEL,
    serialize=base_settings.LOG_SERIALIZE,
    format="[{time:YYYY-MM-DD HH:mm:ss}: {level}] {name}:{function} {message}",
)

if base_settings.SEQ_URL:
    from seqlog import SeqLogHandler

    handler = SeqLogHandler(
        server_url=base_settings.SEQ_URL,
        api_key=base_settings.SEQ_API_KEY,
        batch_size=10,
        auto_flush_timeout=5,
    )

    logger.add(handler, level=base_settings.LOG_LEVEL)
