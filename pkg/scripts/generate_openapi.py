#!/usr/bin/env python3
"""
Write the OpenAPI document of the webvac API

The JSON document goes to the given path; a YAML copy is written next to it
when PyYAML is installed (the `yaml` extra).
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from webvac.server import create_app  # noqa: E402

DEFAULT_OUTPUT = "docs/openapi.json"


def write_openapi(output_path: str = DEFAULT_OUTPUT) -> List[Path]:
    """
    Write the schema of a freshly created app.

    Args:
        output_path: JSON file to write; parent directories are created

    Returns:
        List[Path]: the files written, JSON first
    """
    schema = create_app().openapi()

    json_path = Path(output_path)
    json_path.parent.mkdir(parents=True, exist_ok=True)
    json_path.write_text(json.dumps(schema, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    written = [json_path]

    try:
        import yaml
    except ImportError:
        print("PyYAML not installed, skipping the YAML copy", file=sys.stderr)
    else:
        yaml_path = json_path.with_suffix(".yaml")
        yaml_path.write_text(yaml.safe_dump(schema, allow_unicode=True, sort_keys=False), encoding="utf-8")
        written.append(yaml_path)

    print(f"webvac API {schema['info']['version']}: {len(schema['paths'])} paths")
    return written


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Write the OpenAPI document of the webvac API")
    parser.add_argument("-o", "--output", default=DEFAULT_OUTPUT, help=f"JSON output path (default: {DEFAULT_OUTPUT})")
    args = parser.parse_args(argv)
    for path in write_openapi(args.output):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
