from __future__ import annotations

import logging
import subprocess
import sys
from pathlib import Path
from typing import List, Tuple

ROOT_DIR = Path(__file__).resolve().parent.parent
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

logger = logging.getLogger("milnorkit.validate")

EXCLUDES = ".venv,venv,__pycache__,.git,examples"


class ValidationResult:
    def __init__(self, name: str, passed: bool, message: str = "", warnings: List[str] = None):
        self.name = name
        self.passed = passed
        self.message = message
        self.warnings = warnings or []

    def __repr__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} - {self.message}"


def check_command_exists(cmd: str) -> bool:
    """Check if a command exists in PATH."""
    try:
        subprocess.run(
            ["which", cmd] if sys.platform != "win32" else ["where", cmd],
            capture_output=True,
            check=True,
        )
        return True
    except (subprocess.CalledProcessError, FileNotFoundError):
        return False


def _run_tool(name: str, argv: List[str], timeout: int, blocking: bool = True) -> ValidationResult:
    if not check_command_exists(argv[0]):
        return ValidationResult(name, True, f"{argv[0]} not installed (skipped)", [f"{argv[0]} not found"])
    try:
        result = subprocess.run(argv, capture_output=True, text=True, timeout=timeout, cwd=ROOT_DIR)
    except subprocess.TimeoutExpired:
        return ValidationResult(name, not blocking, f"{name} timed out")
    except Exception as e:
        return ValidationResult(name, not blocking, f"Error running {name}: {e}")
    if result.returncode == 0:
        return ValidationResult(name, True, f"{name} passed")
    output = (result.stdout or result.stderr or "See output above")[:1000]
    if not blocking:
        return ValidationResult(name, True, f"Issues (non-blocking):\n{output}", [f"{name} warnings"])
    return ValidationResult(name, False, f"Issues found:\n{output}")


def validate_black() -> ValidationResult:
    """Validate code formatting with black."""
    return _run_tool("black", ["black", "--check", "--diff", "--exclude", "examples", "."], 30)


def validate_flake8() -> ValidationResult:
    """Validate code style with flake8."""
    return _run_tool("flake8", ["flake8", ".", f"--exclude={EXCLUDES}"], 30)


def validate_mypy() -> ValidationResult:
    """Validate type hints with mypy (non-blocking)."""
    return _run_tool(
        "mypy",
        ["mypy", "milnorkit", "commands", "cli.py", "--ignore-missing-imports"],
        60,
        blocking=False,
    )


def validate_pytest(include_slow: bool = False) -> ValidationResult:
    """Run tests with pytest; the doubled-family checks only when asked."""
    tests_dir = ROOT_DIR / "tests"
    if not tests_dir.exists() or not any(tests_dir.glob("test_*.py")):
        return ValidationResult("pytest", True, "No tests found (skipped)", ["No test files detected"])
    argv = ["pytest", str(tests_dir), "-v", "--tb=short"]
    if include_slow:
        argv += ["-m", "slow or not slow"]
    return _run_tool("pytest", argv, 1800 if include_slow else 300)


def validate_bundled_links() -> ValidationResult:
    """Every file under links/ parses, and surgery files satisfy their own shape checks."""
    try:
        from milnorkit.diagram import read_document
        from milnorkit.dwyer import parse_surgery
        from milnorkit.errors import MilnorKitError
        from milnorkit.fixtures import LINKS_DIR, bundled_names, load_bundled
    except ImportError as e:
        return ValidationResult("links", True, f"milnorkit not importable (skipped): {e}", ["import failed"])

    problems = []
    names = bundled_names()
    for name in names:
        try:
            diagram = load_bundled(name)
            document = read_document(LINKS_DIR / f"{name}.json")
            if "surgered" in document:
                parse_surgery(document)
            logger.info("%s: %d components, %d crossings", name, diagram.n_components, len(diagram.crossings))
        except MilnorKitError as e:
            problems.append(f"{name}: {e}")
    if problems:
        return ValidationResult("links", False, "\n".join(problems))
    return ValidationResult("links", True, f"{len(names)} bundled diagrams parse")


def run_all_validations(
    skip_tests: bool = False,
    skip_type_check: bool = False,
    include_slow: bool = False,
) -> Tuple[List[ValidationResult], bool]:
    """
    Run all validation checks.

    Returns:
        Tuple of (results list, overall success)
    """
    results: List[ValidationResult] = []

    logger.info("Checking bundled diagrams...")
    results.append(validate_bundled_links())

    logger.info("Running code quality checks...")
    results.append(validate_black())
    results.append(validate_flake8())

    if not skip_type_check:
        logger.info("Running type checks...")
        results.append(validate_mypy())

    if not skip_tests:
        logger.info("Running tests...")
        results.append(validate_pytest(include_slow))

    critical_checks = ["black", "flake8", "pytest", "links"]
    failed_critical = [r for r in results if r.name in critical_checks and not r.passed]
    return results, len(failed_critical) == 0


def print_validation_summary(results: List[ValidationResult], overall_success: bool) -> None:
    """Print a formatted summary of validation results."""
    print("\n" + "=" * 70)
    print("VALIDATION SUMMARY")
    print("=" * 70)

    for result in results:
        status = "✓" if result.passed else "✗"
        print(f"{status} {result.name}: {result.message}")
        for warning in result.warnings:
            print(f"  ⚠ Warning: {warning}")

    print("=" * 70)
    if overall_success:
        print("✓ All critical validations passed")
    else:
        print("✗ Some critical validations failed")
    print("=" * 70 + "\n")


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Validate the milnorkit codebase")
    parser.add_argument("--skip-tests", action="store_true", help="Skip test execution")
    parser.add_argument("--skip-type-check", action="store_true", help="Skip type checking")
    parser.add_argument("--slow", action="store_true", help="Include the slow family tests")
    parser.add_argument("--quiet", action="store_true", help="Suppress output")

    args = parser.parse_args()

    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s: %(message)s",
    )

    results, success = run_all_validations(
        skip_tests=args.skip_tests,
        skip_type_check=args.skip_type_check,
        include_slow=args.slow,
    )

    if not args.quiet:
        print_validation_summary(results, success)

    sys.exit(0 if success else 1)
