"""higmankit: relator codings, two-generator rewriting and Higman-style sequence sets."""
from .codec import canonical, decode, decode_lenient, encode, format_tuple, parse_tuple, valid_coding
from .errors import (AlphabetMismatch, HigmanKitError, InvalidCoding, ParseError, PatternError,
                     SchemeDomainError, UnknownGenerator, UnsupportedPattern)
from .freewords import ABC, BC, Alphabet, Word, commutator, format_word, inv, mul, parse_word, power, reduce_word

__version__ = "0.1.0"
