"""Bounded checks on generic limit sets."""

from .bounds import *
from .certificate import *
from .enabling import *
from .forcing import *
from .estimate import *
from .classifier import *
from .report import *
