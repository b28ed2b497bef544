from .config import Guards, load_config, setup_logging
from .diagram import LinkDiagram, load_diagram, parse_pd, wirtinger
from .dwyer import SurgeryPresentation, dwyer_number, family_k, parse_surgery
from .formatting import ReportFormatter
from .freegroup import Word, parse_word
from .magnus import TruncatedSeries, magnus_expand
from .milnor import MilnorTable, milnor_table, mu_bar
from .validators import Validator

__all__ = [
    "Guards",
    "load_config",
    "setup_logging",
    "LinkDiagram",
    "load_diagram",
    "parse_pd",
    "wirtinger",
    "SurgeryPresentation",
    "dwyer_number",
    "family_k",
    "parse_surgery",
    "ReportFormatter",
    "Word",
    "parse_word",
    "TruncatedSeries",
    "magnus_expand",
    "MilnorTable",
    "milnor_table",
    "mu_bar",
    "Validator",
]
