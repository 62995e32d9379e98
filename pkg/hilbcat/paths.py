"""Path configuration for fixture input and report output directories."""
from pathlib import Path
from typing import List, Optional, Union


# Project root directory
PROJECT_ROOT = Path(__file__).resolve().parent.parent

# Input directory for fixtures
INPUT_DIR = PROJECT_ROOT / "input"

# Output directories
OUTPUT_DIR = PROJECT_ROOT / "output"
LOGS_DIR = OUTPUT_DIR / "logs"
REPORTS_DIR = OUTPUT_DIR / "reports"


def ensure_directories():
    """Create input/output directories if they don't exist."""
    for directory in (INPUT_DIR, OUTPUT_DIR, LOGS_DIR, REPORTS_DIR):
        directory.mkdir(parents=True, exist_ok=True)


def get_input_path(filename: str) -> Path:
    """
    Get full path for a fixture file.

    Args:
        filename: Name of the fixture file

    Returns:
        Path object for the fixture
    """
    ensure_directories()
    return INPUT_DIR / filename


def resolve_input(file_path: Union[str, Path]) -> Path:
    """Use the path as given if it exists, otherwise look in input/."""
    path = Path(file_path)
    if path.exists() or path.is_absolute():
        return path
    return get_input_path(str(file_path))


def get_output_path(filename: str, subfolder: str = "", base: Optional[Union[str, Path]] = None) -> Path:
    """
    Get full path for an output file.

    Args:
        filename: Name of the output file
        subfolder: Optional subfolder (logs, reports)
        base: Directory overriding output/ (the CLI's --out)

    Returns:
        Path object for the output file
    """
    base_dir = Path(base) if base is not None else OUTPUT_DIR
    if subfolder:
        base_dir = base_dir / subfolder
    base_dir.mkdir(parents=True, exist_ok=True)
    return base_dir / filename


def list_input_files(extension: str = ".json") -> List[Path]:
    """
    List all fixtures in the input directory with given extension.

    Args:
        extension: File extension to filter (default: .json)

    Returns:
        Sorted list of Path objects for matching files
    """
    ensure_directories()

    if not extension.startswith("."):
        extension = f".{extension}"

    return sorted(INPUT_DIR.glob(f"*{extension}"))
