#!/usr/bin/env python3
"""
Estimation Demo

Walks through one synchronization under global and local tampering: the
received SI-state, the synchronizer each method builds, the resulting
(state, cost) estimates and the sequences the builders explain.

Run with: python scripts/demo_system.py [--dot-dir DIR]
"""

import argparse
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
    PURPLE = '\033[95m'
    CYAN = '\033[96m'
    END = '\033[0m'
    BOLD = '\033[1m'

def print_step(source, message):
    """Print source-tagged colored messages"""
    colors = {
        "System": Colors.BLUE,
        "Builder": Colors.GREEN,
        "Oracle": Colors.PURPLE,
        "Input": Colors.CYAN,
    }
    color = colors.get(source, Colors.YELLOW)
    print(f"{color}{Colors.BOLD}[{source}]{Colors.END} {color}{message}{Colors.END}")

def print_header(title):
    """Print demo section header"""
    print(f"\n{Colors.BOLD}{'='*70}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.CYAN}{title:^70}{Colors.END}")
    print(f"{Colors.BOLD}{'='*70}{Colors.END}\n")

def show_estimate(source, estimate):
    pairs = ", ".join(f"({q}, {c})" for q, c in sorted(estimate)) or "∅"
    print_step(source, f"estimate = {{{pairs}}}")

def write_dot(dot_dir, name, sync):
    from api.dot import export_dot

    if dot_dir is None:
        return
    path = Path(dot_dir) / f"{name}.dot"
    with open(path, "w", encoding="utf-8") as f:
        f.writelines(export_dot(sync))
    print_step("Input", f"wrote {path}")

def demo_global(fixtures, dot_dir):
    """Global tampering on the three-state cycle"""
    print_header("GLOBAL TAMPERING")

    from estimation import build_egt_synchronizer, build_global_system_synchronizer, estimate_error_free, extract_geto

    plant, erm, tau = fixtures["plant"], fixtures["erm"], fixtures["tau_global"]
    print_step("Input", f"received SI-state {tau}, budget c_u = {erm.bound}")
    print_step("Input", f"error-free estimate: {sorted(estimate_error_free(plant, tau, ['s0']))}")

    gg, sync = build_global_system_synchronizer(plant, erm, tau, ["s0"])
    print_step("System", f"G_g has {len(gg.system.states)} states, synchronizer {len(sync)} nodes")
    show_estimate("System", sync.estimate(sync.ending_nodes[0]))
    write_dot(dot_dir, "global_system", sync)

    egt = build_egt_synchronizer(plant, erm, tau, ["s0"])
    print_step("Builder", f"E_gT-synchronizer has {len(egt)} nodes")
    show_estimate("Builder", {(q, node.cost) for node in egt.ending_nodes for q in egt.estimate(node)})
    sequences, _ = extract_geto(egt)
    for item in sorted(sequences):
        print_step("Builder", f"explains original {item}")
    write_dot(dot_dir, "global_builder", egt)

def demo_local(fixtures, dot_dir):
    """Local tampering on the three-state cycle"""
    print_header("LOCAL TAMPERING")

    from estimation import build_elt_synchronizer, estimate_local_system, extract_leto
    from oracle import oracle_local

    plant, erms, tau = fixtures["plant"], fixtures["local_erms"], fixtures["tau_local"]
    print_step("Input", f"received SI-state {tau}, shared budget c_u = {erms.bound}")
    show_estimate("System", estimate_local_system(plant, erms, tau, ["s0"]))

    elt = build_elt_synchronizer(plant, erms, tau, ["s0"])
    show_estimate("Builder", {(q, node.cost) for node in elt.ending_nodes for q in elt.estimate(node)})
    sequences, _ = extract_leto(elt)
    for item in sorted(sequences):
        print_step("Builder", f"explains original {item}")
    show_estimate("Oracle", oracle_local(plant, erms, tau, ["s0"]))
    write_dot(dot_dir, "local_builder", elt)

def main():
    """Run the demo"""
    from api.codec import parse_erm, parse_local_erms, parse_plant, parse_si_state
    from config import Settings, configure_logging

    parser = argparse.ArgumentParser(description="Walk through one synchronization")
    parser.add_argument("--dot-dir", default=None, help="Write synchronizer DOT files here")
    args = parser.parse_args()

    settings = Settings.from_env()
    configure_logging(settings.log_level, settings.log_json)

    def read(name):
        return (FIXTURES / name).read_text(encoding="utf-8")

    fixtures = {
        "plant": parse_plant(read("f1_plant.json")),
        "erm": parse_erm(read("f1_erm_e2.json")),
        "local_erms": parse_local_erms(read("f1_local_erms.json")),
        "tau_global": parse_si_state(read("f1_si_global.json")),
        "tau_local": parse_si_state(read("f1_si_local.json")),
    }
    demo_global(fixtures, args.dot_dir)
    demo_local(fixtures, args.dot_dir)

if __name__ == "__main__":
    main()
