__version__ = "0.1.0"

from . import enums
from . import errors
from . import limits
from . import util
from . import automata
from . import subshifts
from . import machines
from . import lab
from . import formats

from .enums import *
from .errors import *
from .automata import *
from .subshifts import *
from .machines import *
from .lab import *
