import sys
from pathlib import Path

from loguru import logger

_configured_dirs: set[Path] = set()


def setup_logger(
    name: str = "",
    log_dir: Path | None = None,
    console_level: str = "INFO",
    file_level: str = "DEBUG",
) -> logger.__class__:
    """
    Return a logger bound to ``name``.

    Sinks are installed the first time a given ``log_dir`` is seen; later calls
    only bind, so library modules can call this at import time without
    tearing down handlers that the CLI already configured. Without ``log_dir``
    the logger joins whatever sinks exist, falling back to ``logs/``.
    """
    instance = logger.bind(name=name)
    if log_dir is None:
        if _configured_dirs:
            return instance
        log_dir = Path("logs")
    log_dir = Path(log_dir)
    if log_dir in _configured_dirs:
        return instance

    log_dir.mkdir(parents=True, exist_ok=True)
    if not _configured_dirs:
        logger.remove()

        # Console output for development
        logger.add(
            sys.stderr,
            colorize=True,
            format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{extra[name]}</cyan> - <level>{message}</level>",
            level=console_level,
        )
    _configured_dirs.add(log_dir)

    # Main log file
    logger.add(
        log_dir / "main.log",
        rotation="100 MB",
        retention="7 days",
        compression="zip",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]}:{function}:{line} - {message}",
        level=file_level,
        enqueue=True,
        backtrace=True,
        diagnose=False,
    )

    # Timings and memory from the pipeline and bench runner
    logger.add(
        log_dir / "performance.log",
        rotation="50 MB",
        retention="7 days",
        compression="zip",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {message}",
        filter=lambda record: "performance" in record["extra"],
        level="DEBUG",
        enqueue=True,
    )

    # Critical errors
    logger.add(
        log_dir / "errors.log",
        rotation="50 MB",
        retention="30 days",
        compression="zip",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]}:{function}:{line} - {message}\n{exception}",
        level="ERROR",
        enqueue=True,
        backtrace=True,
        diagnose=False,
    )

    return instance
