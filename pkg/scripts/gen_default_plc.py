#!/usr/bin/env python3
"""Regenerate the bundled default PLC channel files from their path models."""
from pathlib import Path

from hybridsec.channel import DEFAULT_PLC, _DATA_FILES, plc_response, write_plc_file

N = 64


def main():
    data_dir = Path(__file__).resolve().parent.parent / "src" / "hybridsec" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for link, model in DEFAULT_PLC.items():
        resp = plc_response(model, N)
        out = data_dir / _DATA_FILES[link]
        write_plc_file(resp, out)
        print(f"wrote {out}")


if __name__ == "__main__":
    main()
