"""Main entry point for Perfect Solve."""

import sys

from perfectsolve.cli import main as cli_main
from perfectsolve.server import main as mcp_main

CLI_COMMANDS = ['alpha', 'color', 'basic', 'find-2join', 'find-end', 'gen', 'oracle', 'check', 'config']


def main():
    """Entry point that routes to MCP server or CLI based on arguments."""
    if len(sys.argv) > 1 and sys.argv[1] in CLI_COMMANDS + ['--help', '-v', '--verbose', '-c', '--config']:
        # CLI mode
        cli_main()
    else:
        # MCP server mode
        print("Starting Perfect Solve MCP Server...")
        print("Use 'uv run python main.py alpha <file>' for CLI mode")
        print("Or use dedicated commands: 'uv run perfectsolve alpha <file>' or 'uv run perfectsolve-mcp-server'")
        print("Config file: src/perfectsolve/solver_config.json")
        mcp_main()


if __name__ == "__main__":
    main()
