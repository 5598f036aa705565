import shutil
from pathlib import Path

from src.core.logging import setup_logger

project_root = Path(__file__).parent.parent
test_logs_dir = project_root / "tests" / "logs"
test_data_dir = project_root / "tests" / "data"

# Library loggers bind to the first configured sinks, so this keeps test runs
# out of the project's logs/ directory.
setup_logger("tests", log_dir=test_logs_dir, console_level="WARNING")


def pytest_sessionfinish(session, exitstatus):
    """
    Clean up test data and logs after test session completes
    """
    for directory in (test_data_dir, test_logs_dir):
        if not directory.exists():
            continue
        for item in directory.iterdir():
            if item.is_file():
                Path.unlink(item)
            elif item.is_dir():
                shutil.rmtree(item)
        print(f"Cleaned test directory: {directory}")
