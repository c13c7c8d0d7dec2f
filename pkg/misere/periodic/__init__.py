from misere.periodic.closed_form import (
    ApCheckReport,
    TwValues,
    ap_check,
    ap_outcome,
    bridge_power,
    bridge_product,
    family_phi_words,
    tw_values,
)
from misere.periodic.distinguish import ap_distinguish, separates
from misere.periodic.elements import (
    TAGS,
    ApElement,
    ap_in_P,
    ap_multiply,
    ap_normalize,
    ap_phi,
    ap_position_element,
    ap_power,
    parse_ap_element,
)

__all__ = [
    "TAGS",
    "ApCheckReport",
    "ApElement",
    "TwValues",
    "ap_check",
    "ap_distinguish",
    "ap_in_P",
    "ap_multiply",
    "ap_normalize",
    "ap_outcome",
    "ap_phi",
    "ap_position_element",
    "ap_power",
    "bridge_power",
    "bridge_product",
    "family_phi_words",
    "parse_ap_element",
    "separates",
    "tw_values",
]
