"""Subshifts: SFTs, language samples and chain components."""

from .language import *
from .sft import *
from .components import *
from .obstruction import *
