"""Published JSON schema for the machine-readable reports (wfano-certify/1).

Every report emitted by the command line validates against REPORT_SCHEMA.
Rationals are exact fraction strings matching FRACTION_PATTERN; nothing is
ever emitted as a float unless explicitly labelled approximate.
"""

from __future__ import annotations

SCHEMA_VERSION = "wfano-certify/1"

FRACTION_PATTERN = r"^-?\d+(/\d+)?$"

TRACE_ENTRY_SCHEMA = {
    "type": "object",
    "required": ["rule_id", "statement", "external", "scope", "hypotheses", "inputs"],
    "properties": {
        "rule_id": {"type": "string"},
        "statement": {"type": "string"},
        "citation": {"type": ["string", "null"]},
        "external": {"type": "boolean"},
        "scope": {"enum": ["global", "vertex", "away", "upper", "note"]},
        "hypotheses": {"type": "array", "items": {"type": "string"}},
        "inputs": {"type": "object"},
        "output": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["schema_version", "command", "inputs", "outputs"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "outputs": {"type": "object"},
        "trace": {"type": "array", "items": TRACE_ENTRY_SCHEMA},
        "approx": {"type": "object"},
    },
    "additionalProperties": False,
}

ERROR_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["schema_version", "error"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "error": {
            "type": "object",
            "required": ["kind", "message"],
            "properties": {
                "kind": {"type": "string"},
                "message": {"type": "string"},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}
