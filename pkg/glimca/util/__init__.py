"""Utilities."""

from .misc import *
from .interfaces import *
from .words import *
