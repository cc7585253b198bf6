import sys

from fatpoints.main import run

sys.exit(run())
