from misere.catalog.harness import (
    VerificationReport,
    claimed_name_holds,
    identify_named,
    match_solution,
    published_monoid,
    verify_all,
    verify_published,
)
from misere.catalog.records import (
    Catalog,
    NamedQuotient,
    OrderRecord,
    PhiSpec,
    PublishedSolution,
    find_record,
    load_catalog,
    named_quotient,
)
from misere.catalog.tables import extend_phi, parse_phi_table, render_phi_table

__all__ = [
    "Catalog",
    "NamedQuotient",
    "OrderRecord",
    "PhiSpec",
    "PublishedSolution",
    "VerificationReport",
    "claimed_name_holds",
    "extend_phi",
    "find_record",
    "identify_named",
    "load_catalog",
    "match_solution",
    "named_quotient",
    "parse_phi_table",
    "published_monoid",
    "render_phi_table",
    "verify_all",
    "verify_published",
]
