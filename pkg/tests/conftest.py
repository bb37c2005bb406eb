import pathlib
import sys

# test the checkout, installed or not
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
