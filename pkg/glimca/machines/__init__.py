"""Turing machines and their compilation into signal automata."""

from .turing import *
from .predicate import *
from .sigma3 import *
from .signal import *
from .proof import *
from .checks import *
