"""Line-oriented file formats for rules, subshifts and machines.

Each format module has a ``load`` function taking a path or an open
text file, and rule and machine files have a ``dump`` function too.
Blank lines and lines starting with ``//`` are ignored.
"""

from . import ca
from . import sft
from . import tm
from .literals import *
