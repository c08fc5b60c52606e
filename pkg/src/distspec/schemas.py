"""JSON Schemas for the machine-readable CLI output."""

SPECTRUM_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["value", "multiplicity", "exact"],
        "properties": {
            "value": {"type": "number"},
            "multiplicity": {"type": "integer", "minimum": 1},
            "exact": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
}

VERDICT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Verdict",
    "type": "object",
    "required": ["claim_id", "holds", "witness"],
    "properties": {
        "claim_id": {"type": "string"},
        "holds": {"type": "boolean"},
        "witness": {"type": ["object", "null"]},
        "input": {"type": "string"},
    },
    "additionalProperties": False,
    "if": {"properties": {"holds": {"const": False}}},
    "then": {"properties": {"witness": {"type": "object"}}},
}

SEARCH_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "SearchReport",
    "type": "object",
    "required": ["kind", "parameters", "scanned", "hits", "summary"],
    "properties": {
        "kind": {"enum": ["three-distinct-trees", "minus-one-trees", "c3c4free-minus3", "interval-count"]},
        "parameters": {
            "type": "object",
            "required": ["n_max", "tol"],
            "properties": {"n_max": {"type": "integer", "minimum": 1}, "tol": {"type": "number", "exclusiveMinimum": 0}},
        },
        "scanned": {"type": "integer", "minimum": 0},
        "elapsed": {"type": "number", "minimum": 0},
        "summary": {"type": "object"},
        "hits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["graph6", "n"],
                "properties": {
                    "graph6": {"type": "string", "minLength": 1},
                    "n": {"type": "integer", "minimum": 1},
                    "spectrum": SPECTRUM_SCHEMA,
                    "category": {"enum": ["t-family", "s22", "others"]},
                    "recipe": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "multiplicity": {"type": "integer", "minimum": 1},
                    "count": {"type": "integer", "minimum": 0},
                    "star": {"type": "boolean"},
                },
            },
        },
    },
    "additionalProperties": False,
}

SCHEMAS = {"verdict": VERDICT_SCHEMA, "search-report": SEARCH_REPORT_SCHEMA}
