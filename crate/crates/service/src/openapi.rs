use serde_json::{json, Value};

fn window_params() -> Value {
    json!([
        {"name": "id", "in": "path", "required": true, "schema": {"type": "string", "format": "uuid"}},
        {"name": "a", "in": "query", "schema": {"type": "integer", "default": -6}},
        {"name": "b", "in": "query", "schema": {"type": "integer", "default": 7}}
    ])
}

fn id_param() -> Value {
    json!([{"name": "id", "in": "path", "required": true, "schema": {"type": "string", "format": "uuid"}}])
}

fn error(description: &str) -> Value {
    json!({"description": description, "content": {"application/json": {"schema": {"$ref": "#/components/schemas/Error"}}}})
}

/// OpenAPI 3.0 description of the routes.
pub fn document() -> Value {
    json!({
        "openapi": "3.0.3",
        "info": {"title": "infgon service", "version": env!("CARGO_PKG_VERSION")},
        "paths": {
            "/sessions": {"post": {
                "summary": "Create a session from a triangulation descriptor",
                "requestBody": {"required": true, "content": {"application/json": {"schema": {"$ref": "#/components/schemas/Descriptor"}}}},
                "responses": {"201": {"description": "Session id, classification and component count"}, "400": error("Invalid descriptor")}
            }},
            "/sessions/{id}": {
                "get": {"summary": "Current state", "parameters": id_param(), "responses": {"200": {"description": "Snapshot"}, "404": error("Unknown session")}},
                "delete": {"summary": "Drop a session", "parameters": id_param(), "responses": {"204": {"description": "Deleted"}, "404": error("Unknown session")}}
            },
            "/sessions/{id}/window": {"get": {
                "summary": "Arcs, sides, frozen flags and flippability in [a,b]",
                "parameters": window_params(),
                "responses": {"200": {"description": "Window snapshot"}, "404": error("Unknown session"), "422": error("Empty or oversize window")}
            }},
            "/sessions/{id}/flip": {"post": {
                "summary": "Flip an arc",
                "parameters": id_param(),
                "requestBody": {"required": true, "content": {"application/json": {"schema": {
                    "type": "object", "required": ["arc"],
                    "properties": {"arc": {"$ref": "#/components/schemas/Edge"}, "quantum": {"type": "boolean", "default": false}}
                }}}},
                "responses": {"200": {"description": "New arc and exchange relation"}, "404": error("Unknown session"), "409": error("Arc not flippable")}
            }},
            "/sessions/{id}/quiver": {"get": {
                "summary": "Exchange quiver of a window as JSON, or DOT with Accept: text/vnd.graphviz",
                "parameters": window_params(),
                "responses": {"200": {"description": "Quiver"}, "404": error("Unknown session"), "422": error("Empty or oversize window")}
            }},
            "/sessions/{id}/qcommute": {"get": {
                "summary": "Quasi-commutation exponents among the edges of a window",
                "parameters": window_params(),
                "responses": {"200": {"description": "Edges and L matrix"}, "404": error("Unknown session"), "422": error("Empty or oversize window")}
            }},
            "/sessions/{id}/undo": {"post": {"summary": "Undo the last flip", "parameters": id_param(),
                "responses": {"200": {"description": "Snapshot"}, "404": error("Unknown session"), "409": error("Nothing to undo")}}},
            "/sessions/{id}/redo": {"post": {"summary": "Redo an undone flip", "parameters": id_param(),
                "responses": {"200": {"description": "Snapshot"}, "404": error("Unknown session"), "409": error("Nothing to redo")}}},
            "/spec": {"get": {"summary": "This document", "responses": {"200": {"description": "OpenAPI document"}}}}
        },
        "components": {"schemas": {
            "Edge": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            "Descriptor": {"type": "object", "required": ["base"], "properties": {
                "base": {"oneOf": [
                    {"type": "object", "properties": {"kind": {"enum": ["leapfrog"]}, "center": {"type": "integer"}}},
                    {"type": "object", "properties": {"kind": {"enum": ["fountain"]}, "vertex": {"type": "integer"}}},
                    {"type": "object", "properties": {"kind": {"enum": ["split"]}, "l": {"type": "integer"}, "r": {"type": "integer"}}}
                ]},
                "removed": {"type": "array", "items": {"$ref": "#/components/schemas/Edge"}},
                "added": {"type": "array", "items": {"$ref": "#/components/schemas/Edge"}}
            }},
            "Error": {"type": "object", "required": ["code", "message"], "properties": {
                "code": {"type": "string"}, "message": {"type": "string"}, "arc": {"$ref": "#/components/schemas/Edge"}
            }}
        }}
    })
}
