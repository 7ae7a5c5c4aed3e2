# Anchors the tests directory on sys.path so the oracle helpers import
# regardless of how pytest is invoked.
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
