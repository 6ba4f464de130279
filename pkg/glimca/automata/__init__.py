"""Cellular automata: alphabets, rules, configurations and runs."""

from .alphabet import *
from .rule import *
from .builtins import *
from .configuration import *
from .wordset import *
from .diagram import *
from .engine import *
