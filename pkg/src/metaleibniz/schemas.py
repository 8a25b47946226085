"""JSON Schemas for element and symmetric-data documents."""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[1-9][0-9]*)?$"}

POLY = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "coef": RATIONAL,
            "exps": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "required": ["coef", "exps"],
        "additionalProperties": False,
    },
}

ELEMENT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "linear": {"type": "array", "items": RATIONAL},
        "quad": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "i": {"type": "integer", "minimum": 1},
                    "j": {"type": "integer", "minimum": 1},
                    "poly": POLY,
                },
                "required": ["i", "j", "poly"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["n", "linear", "quad"],
    "additionalProperties": False,
}

SYMMETRIC_DATA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "alpha": RATIONAL,
        "f": POLY,
        "g": POLY,
    },
    "required": ["n", "alpha", "f", "g"],
    "additionalProperties": False,
}
