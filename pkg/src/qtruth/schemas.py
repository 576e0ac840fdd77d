"""JSON Schemas for the model file and the command-line JSON outputs."""

_complex = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}
_matrix = {"type": "array", "items": {"type": "array", "items": _complex}}
_vector = {"type": "array", "items": _complex}

MODEL_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "model file",
    "type": "object",
    "properties": {
        "dimension": {"type": "integer", "minimum": 1},
        "atoms": {"type": "object", "additionalProperties": _matrix},
        "state": _vector,
        "phase": {
            "type": "object",
            "properties": {
                "points": {"type": "array", "items": {"type": "string"}},
                "atoms": {
                    "type": "object",
                    "additionalProperties": {"type": "array", "items": {"type": "string"}},
                },
            },
            "required": ["points", "atoms"],
            "additionalProperties": False,
        },
    },
    "oneOf": [
        {"required": ["dimension", "atoms"], "not": {"required": ["phase"]}},
        {"required": ["phase"], "not": {"required": ["atoms"]}},
    ],
    "additionalProperties": False,
}

CHECK_SCHEMA = {
    "type": "object",
    "properties": {
        "label": {"type": "string"},
        "formulas": {"type": "array", "items": {"type": "string"}},
        "semantics": {"type": "string"},
        "space": {"type": "string"},
        "expected": {"type": "string"},
        "computed": {"type": "string"},
        "passed": {"type": "boolean"},
    },
    "required": ["label", "formulas", "semantics", "space", "expected", "computed", "passed"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "title": {"type": "string"},
        "ok": {"type": "boolean"},
        "checks": {"type": "array", "items": CHECK_SCHEMA},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["name", "title", "ok", "checks", "notes"],
    "additionalProperties": False,
}

SCENARIO_OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "scenario output",
    "type": "object",
    "properties": {
        "ok": {"type": "boolean"},
        "reports": {"type": "array", "items": REPORT_SCHEMA},
    },
    "required": ["ok", "reports"],
    "additionalProperties": False,
}

VERDICTS = ["TRUE", "FALSE", "U", "INDETERMINATE", "GAP", "TAUTOLOGY", "CONTRADICTION",
            "CONTINGENT"]

EVAL_OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "eval output",
    "type": "object",
    "properties": {
        "semantics": {"enum": ["classical", "trivalent", "quantum", "tarski", "phase"]},
        "formula": {"type": "string"},
        "verdict": {"enum": VERDICTS},
        "copy": {"anyOf": [_matrix, {"const": "GAP"}, {"type": "null"}]},
        "state_verdict": {"anyOf": [{"enum": VERDICTS}, {"type": "null"}]},
        "points": {"anyOf": [{"type": "array", "items": {"type": "string"}}, {"type": "null"}]},
    },
    "required": ["semantics", "formula", "verdict"],
    "additionalProperties": False,
}

TABLE_OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "truth table",
    "type": "object",
    "properties": {
        "semantics": {"enum": ["classical", "trivalent"]},
        "formula": {"type": "string"},
        "atoms": {"type": "array", "items": {"type": "string"}},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "valuation": {"type": "object",
                                  "additionalProperties": {"enum": ["t", "f", "u"]}},
                    "value": {"enum": ["t", "f", "u"]},
                },
                "required": ["valuation", "value"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["semantics", "formula", "atoms", "rows"],
    "additionalProperties": False,
}
