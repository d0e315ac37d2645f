"""Serve the API: python -m ghk.service [--host HOST] [--port PORT]."""
from __future__ import annotations

import argparse

import uvicorn


def main() -> None:
    parser = argparse.ArgumentParser(prog="ghk-service", description="Run the ghk HTTP service.")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--reload", action="store_true", help="auto-reload on code changes")
    args = parser.parse_args()
    uvicorn.run("ghk.service.app:app", host=args.host, port=args.port, reload=args.reload)


if __name__ == "__main__":
    main()
