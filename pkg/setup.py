#!/usr/bin/env python3
"""
Setup check script for SIMPREF
Verifies dependencies and package layout, creates src/config/.env from the template
and smoke-tests the CLI
"""

import shutil
import subprocess
import sys
from pathlib import Path

# (pip name, import name)
REQUIRED_PACKAGES = [
    ("click", "click"),
    ("numpy", "numpy"),
    ("pandas", "pandas"),
    ("python-dotenv", "dotenv"),
    ("scipy", "scipy"),
]

REQUIRED_FILES = [
    "src/errors.py",
    "src/expr/parser.py",
    "src/expr/jets.py",
    "src/analysis/ranges.py",
    "src/analysis/simpson.py",
    "src/analysis/bounds.py",
    "src/analysis/composite.py",
    "src/analysis/extremal.py",
    "src/analysis/applications.py",
    "src/config/config.py",
    "src/services/verification_service.py",
    "src/reporting/formats.py",
    "src/cli/main.py",
]


def create_env_file():
    """Create src/config/.env from the template if it doesn't exist"""
    template_path = Path("src/config/env.template")
    env_path = Path("src/config/.env")

    if env_path.exists():
        print("✓ .env file already exists")
        return
    if not template_path.exists():
        print("❌ env.template not found")
        return

    try:
        shutil.copy(template_path, env_path)
        print("✓ Created src/config/.env from template (defaults; environment variables still win)")
    except OSError as e:
        print(f"❌ Error creating .env file: {e}")


def check_dependencies():
    """Check if required dependencies are importable"""
    missing = []
    for pip_name, module in REQUIRED_PACKAGES:
        try:
            __import__(module)
            print(f"✓ {pip_name}")
        except ImportError:
            missing.append(pip_name)
            print(f"❌ {pip_name} (missing)")

    if missing:
        print(f"\n⚠️  Missing packages: {', '.join(missing)}")
        print("Run: pip install -r requirements.txt")
        return False
    return True


def check_structure():
    """Check that the package modules exist"""
    missing = [path for path in REQUIRED_FILES if not Path(path).exists()]
    if missing:
        print(f"❌ Missing files: {', '.join(missing)}")
        return False
    print("✓ Package layout complete")
    return True


def test_cli():
    """Integrate t^4 over [0, 1] with the corrected rule; the answer is exactly 0.2"""
    try:
        result = subprocess.run(
            [sys.executable, "-m", "src.cli", "integrate", "--expr", "t^4", "--a", "0", "--b", "1",
             "--rule", "corrected", "--class", "c4"],
            capture_output=True, text=True, timeout=60,
        )
    except (OSError, subprocess.TimeoutExpired) as e:
        print(f"❌ CLI test error: {e}")
        return False

    if result.returncode == 0 and '"estimate": 0.2' in result.stdout:
        print("✓ CLI is working")
        return True
    print(f"❌ CLI test failed: {result.stderr or result.stdout}")
    return False


def main():
    """Main setup function"""
    print("🚀 SIMPREF - Setup Check")
    print("=" * 60)

    print("\n📁 Checking package layout...")
    structure_ok = check_structure()

    print("\n📦 Checking dependencies...")
    deps_ok = check_dependencies()

    print("\n⚙️  Setting up configuration...")
    create_env_file()

    cli_ok = False
    if structure_ok and deps_ok:
        print("\n🧪 Testing CLI...")
        cli_ok = test_cli()

    print("\n" + "=" * 60)
    if structure_ok and deps_ok and cli_ok:
        print("✅ Setup completed successfully!")
        print("\n📝 Next steps:")
        print("  python -m src.cli --help")
        print('  python -m src.cli integrate --expr "cosh(t)" --a -2 --b 2 --tol 1e-8')
        print("  python -m src.cli verify --suite all --seed 42")
    else:
        print("⚠️  Setup completed with issues")
        if not structure_ok:
            print("  - Missing package files")
        if not deps_ok:
            print("  - Missing dependencies")
        if not cli_ok:
            print("  - CLI not working")

    print("\n📚 For more information, see docs/USAGE_GUIDE.md")


if __name__ == "__main__":
    main()
