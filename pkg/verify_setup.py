#!/usr/bin/env python3
"""
Quick verification script for the CACD toolkit
"""

import os
import sys


def check_dependencies():
    """Check if all dependencies are installed"""
    print("🔍 Checking dependencies...")

    try:
        import networkx
        import numpy
        import pandas
        import plotly
        import pytest
        import scipy
        print("✅ All dependencies installed")
        return True
    except ImportError as e:
        print(f"❌ Missing dependency: {e}")
        print("Run: pip install -r requirements.txt")
        return False


def check_structure():
    """Check project structure"""
    print("🔍 Checking project structure...")

    required = [
        'cacd_cli.py',
        'config/settings.py',
        'core/digraph.py',
        'core/representation.py',
        'core/report_generator.py',
        'analysis/circular_ones.py',
        'analysis/proper_cacd.py',
        'analysis/oriented_cacd.py',
        'analysis/oracles.py',
        'visualizations/arc_diagram.py',
    ]

    missing = [f for f in required if not os.path.exists(f)]

    if missing:
        print(f"❌ Missing files: {missing}")
        return False

    print("✅ Project structure OK")
    return True


def check_golden_example():
    """Run the seven-vertex proper construction once"""
    print("🔍 Checking the proper construction...")

    from analysis.proper_cacd import recognize_proper_cacd
    from analysis.reference_instances import seven_vertex_digraph

    verdict = recognize_proper_cacd(seven_vertex_digraph())
    if not verdict.accepted:
        print("❌ Seven-vertex example was rejected")
        return False
    print("✅ Seven-vertex example accepted with a proper certificate")
    return True


if __name__ == "__main__":
    print("=" * 60)
    print("CACD Toolkit - circular-arc catch digraphs")
    print("=" * 60)

    if check_dependencies() and check_structure() and check_golden_example():
        print("\n✅ Setup complete!")
        print("\n🚀 Try:")
        print("   python3 cacd_cli.py recognize <digraph.json> --class proper")
        print("   python3 cacd_cli.py sweep proper-grid-oracle --n 3")
        print("\n🧪 Tests: pytest        (add -m slow for the exhaustive sweeps)")
    else:
        print("\n❌ Setup incomplete. Fix errors above.")
        sys.exit(1)
