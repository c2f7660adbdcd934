#!/usr/bin/env python3
"""
Estimation System Smoke Test

This script runs the fixture instances end to end:
- File loading and validation
- Global and local estimation by both methods
- Oracle agreement
- A short containment batch

Run with: python scripts/test_system.py
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

FIXTURES = project_root / "fixtures"

# Color codes for output
class Colors:
    GREEN = '\033[92m'
    RED = '\033[91m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    END = '\033[0m'
    BOLD = '\033[1m'

def print_status(message, status="INFO"):
    """Print colored status messages"""
    color = {
        "SUCCESS": Colors.GREEN,
        "ERROR": Colors.RED,
        "WARNING": Colors.YELLOW,
        "INFO": Colors.BLUE
    }.get(status, Colors.BLUE)

    print(f"{color}{Colors.BOLD}[{status}]{Colors.END} {color}{message}{Colors.END}")

def print_header(title):
    """Print section header"""
    print(f"\n{Colors.BOLD}{'='*60}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.BLUE}{title:^60}{Colors.END}")
    print(f"{Colors.BOLD}{'='*60}{Colors.END}\n")

def load_fixtures():
    from api.codec import parse_erm, parse_local_erms, parse_plant, parse_si_state

    def read(name):
        return (FIXTURES / name).read_text(encoding="utf-8")

    return {
        "plant": parse_plant(read("f1_plant.json")),
        "erm": parse_erm(read("f1_erm_e2.json")),
        "local_erms": parse_local_erms(read("f1_local_erms.json")),
        "tau_global": parse_si_state(read("f1_si_global.json")),
        "tau_local": parse_si_state(read("f1_si_local.json")),
    }

def test_file_loading():
    """Test 1: Fixture Loading"""
    print_header("TEST 1: FIXTURE LOADING")

    fixtures = load_fixtures()
    plant = fixtures["plant"]
    print_status(f"✓ Plant: {len(plant.states)} states, {len(plant.events)} events, {plant.num_sites} sites", "SUCCESS")
    print_status(f"✓ Global ERM: {len(fixtures['erm'].finite_entries())} finite entries", "SUCCESS")
    print_status(f"✓ SI-states: {fixtures['tau_global']} and {fixtures['tau_local']}", "SUCCESS")
    return True

def test_global_estimation():
    """Test 2: Global Tampering"""
    print_header("TEST 2: GLOBAL TAMPERING")

    from estimation import estimate_global_builder, estimate_global_system
    from oracle import oracle_global

    f = load_fixtures()
    args = (f["plant"], f["erm"], f["tau_global"], ["s0"])
    system = estimate_global_system(*args)
    builder = estimate_global_builder(*args)
    oracle = oracle_global(*args)
    print_status(f"System method:  {sorted(system)}", "INFO")
    print_status(f"Builder method: {sorted(builder)}", "INFO")
    print_status(f"Oracle:         {sorted(oracle)}", "INFO")

    expected = {("s2", 0), ("s0", 1), ("s1", 1)}
    if system == builder == oracle == expected:
        print_status("✓ All three agree on the expected estimate", "SUCCESS")
        return True
    print_status("✗ Estimates disagree", "ERROR")
    return False

def test_local_estimation():
    """Test 3: Local Tampering"""
    print_header("TEST 3: LOCAL TAMPERING")

    from estimation import estimate_local_builder, estimate_local_system
    from oracle import oracle_local

    f = load_fixtures()
    args = (f["plant"], f["local_erms"], f["tau_local"], ["s0"])
    system = estimate_local_system(*args)
    builder = estimate_local_builder(*args)
    oracle = oracle_local(*args)
    print_status(f"System method:  {sorted(system)}", "INFO")
    print_status(f"Builder method: {sorted(builder)}", "INFO")

    expected = {("s0", 1), ("s1", 1)}
    if system == builder == oracle == expected:
        print_status("✓ All three agree on the expected estimate", "SUCCESS")
        return True
    print_status("✗ Estimates disagree", "ERROR")
    return False

def test_containment_batch():
    """Test 4: Containment Batch"""
    print_header("TEST 4: CONTAINMENT BATCH")

    from simulation import containment_batch, load_generator_config

    config = load_generator_config(str(FIXTURES / "generator.yaml"))
    ok = True
    for mode in ("global", "local"):
        report = containment_batch(20, config, mode=mode, seed=0)
        status = "SUCCESS" if report.status == "ok" else "ERROR"
        print_status(f"{mode}: {report.contained}/{report.count} scenarios contained", status)
        ok = ok and report.status == "ok"
    return ok

def test_project_structure():
    """Test 5: Project Structure"""
    print_header("TEST 5: PROJECT STRUCTURE")

    required_files = [
        "automata/plant.py",
        "error_model/erm.py",
        "estimation/engine.py",
        "oracle/brute_force.py",
        "simulation/batch.py",
        "api/codec.py",
        "cli/main.py",
        "config/settings.py",
        "requirements.txt",
    ]
    missing_files = [path for path in required_files if not (project_root / path).exists()]
    for path in required_files:
        if path in missing_files:
            print_status(f"✗ {path}", "ERROR")
        else:
            print_status(f"✓ {path}", "SUCCESS")
    return not missing_files

def main():
    """Run all checks"""
    from config import Settings, configure_logging

    settings = Settings.from_env()
    configure_logging("WARNING", settings.log_json)
    print_status("Starting Estimation System Tests", "INFO")
    print_status(f"Project root: {project_root}", "INFO")

    tests = [
        ("Project Structure", test_project_structure),
        ("Fixture Loading", test_file_loading),
        ("Global Tampering", test_global_estimation),
        ("Local Tampering", test_local_estimation),
        ("Containment Batch", test_containment_batch),
    ]

    results = {}
    for test_name, test_func in tests:
        try:
            results[test_name] = test_func()
        except Exception as e:
            print_status(f"Test {test_name} failed with exception: {e}", "ERROR")
            results[test_name] = False

    print_header("TEST SUMMARY")
    total_tests = len(results)
    passed_tests = sum(results.values())
    for test_name, passed in results.items():
        print_status(f"{test_name}: {'PASSED' if passed else 'FAILED'}", "SUCCESS" if passed else "ERROR")

    print_status(f"Overall: {passed_tests}/{total_tests} checks passed",
                 "SUCCESS" if passed_tests == total_tests else "WARNING")
    return passed_tests == total_tests

if __name__ == "__main__":
    sys.exit(0 if main() else 1)
