"""MCP server exposing the trigraph solver via HTTP."""

import asyncio
import json
from typing import Any, Dict, Optional

from fastmcp import FastMCP

from . import basic as basic_mod
from . import detect
from .core import PerfectSolver
from .errors import PerfectSolveError
from .formats import Format, parse
from .trigraph import Trigraph

# Initialize FastMCP app for HTTP transport
app = FastMCP("Perfect Solve")

# Global solver instance
solver: Optional[PerfectSolver] = None


def get_solver() -> PerfectSolver:
    """Get or create the global solver instance."""
    global solver
    if solver is None:
        solver = PerfectSolver()
    return solver


def parse_instance(instance: str, fmt: Format = "tri") -> Trigraph:
    """Parse instance text sent by a client (trigraph format or DIMACS)."""
    return parse(instance, fmt)


def _error(e: Exception) -> Dict[str, Any]:
    return {"error": str(e), "type": type(e).__name__}


@app.resource("solver://config")
async def solver_config_resource():
    """Resource: Current solver configuration."""
    return {
        "uri": "solver://config",
        "name": "Solver Configuration",
        "description": "Size caps and settings the solver runs with",
        "mimeType": "application/json",
        "text": get_solver().config.model_dump_json(indent=2)
    }


@app.tool("solve_alpha")
async def solve_alpha_tool(instance: str, fmt: Format = "tri"):
    """
    Maximum-weight strong stable set of a Berge trigraph.

    Args:
        instance (str): Instance text in the trigraph format ("p tri <n>", "e u v", "s u v", "w v weight").
        fmt (str, optional): "tri" (default) or "dimacs".

    Returns:
        JSON with alpha, a 0-indexed stable set and the decomposition trace, or a not-in-class certificate.
    """
    try:
        t = parse_instance(instance, fmt)
        report = await asyncio.to_thread(get_solver().solve_alpha, t)
    except PerfectSolveError as e:
        return _error(e)
    return report.model_dump(mode="json")


@app.tool("color_graph")
async def color_graph_tool(instance: str, fmt: Format = "tri"):
    """
    Optimal coloring of a graph (an instance without switchable pairs).

    Args:
        instance (str): Instance text.
        fmt (str, optional): "tri" (default) or "dimacs".

    Returns:
        JSON with the coloring, omega and a maximum clique, or a certificate.
    """
    try:
        g = parse_instance(instance, fmt)
        result = await asyncio.to_thread(get_solver().color_graph, g)
    except PerfectSolveError as e:
        return _error(e)
    return result.model_dump(mode="json")


@app.tool("robust_solve")
async def robust_solve_tool(instance: str, fmt: Format = "tri"):
    """
    Stable set and clique partition of equal size, or a certificate.

    Args:
        instance (str): Instance text of a graph.
        fmt (str, optional): "tri" (default) or "dimacs".

    Returns:
        JSON with the duality pair or the certificate explaining why none was found.
    """
    try:
        g = parse_instance(instance, fmt)
        result = await asyncio.to_thread(get_solver().robust, g)
    except PerfectSolveError as e:
        return _error(e)
    return result.model_dump(mode="json")


@app.tool("recognize_basic")
async def recognize_basic_tool(instance: str, fmt: Format = "tri"):
    """
    Basic classes the instance belongs to, each with its witness.

    Args:
        instance (str): Instance text.
        fmt (str, optional): "tri" (default) or "dimacs".

    Returns:
        JSON list of class reports; empty when the instance is not basic.
    """
    try:
        t = parse_instance(instance, fmt)
        reports = await asyncio.to_thread(basic_mod.recognize_all, t)
    except PerfectSolveError as e:
        return _error(e)
    return [r.model_dump(mode="json") for r in reports]


@app.tool("find_end")
async def find_end_tool(instance: str, fmt: Format = "tri"):
    """
    Minimum proper fragment of the instance with its block of decomposition.

    Args:
        instance (str): Instance text.
        fmt (str, optional): "tri" (default) or "dimacs".

    Returns:
        JSON with the fragment and the block, or null when there is no proper fragment.
    """
    try:
        t = parse_instance(instance, fmt)
        found = await asyncio.to_thread(detect.find_end, t)
    except PerfectSolveError as e:
        return _error(e)
    if found is None:
        return None
    fragment, block = found
    return {
        "fragment": fragment.model_dump(mode="json"),
        "block": block.trigraph.payload().model_dump(),
        "markers": list(block.roles.vertices),
        "side_map": block.side_map
    }


@app.prompt("explain_result")
def explain_result(result: Optional[Dict[str, Any]] = None) -> str:
    """
    Explain a solver result in plain language.

    Args:
        result: JSON returned by one of the solver tools. If None, asks for an instance first.

    Returns:
        Instructions for summarizing the result
    """
    header = "You are a helpful assistant explaining results of an exact graph solver.\n\n"

    if result is None:
        body = (
            "If no result is provided, ask the user for an instance in the trigraph format "
            "and run the `solve_alpha` tool on it."
        )
    else:
        body = f"Here is the solver output:\n\n{json.dumps(result, indent=2)}"

    return header + body + (
        "\n\nExplain:\n"
        "1. The optimum value and the vertices achieving it (convert to 1-indexed)\n"
        "2. How the instance was decomposed, following the trace\n"
        "3. If a certificate was returned, why the instance is outside the supported class\n\n"
        "Use ✅ for solved instances and ⚠️ for certificates."
    )


def main():
    """Main entry point for the HTTP MCP server."""
    import argparse

    parser = argparse.ArgumentParser(description="Perfect Solve HTTP MCP Server")
    parser.add_argument("--config", help="Path to configuration file")
    parser.add_argument("--host", default="127.0.0.1", help="Host to bind to")
    parser.add_argument("--port", type=int, default=11695, help="Port to bind to (default: 11695)")

    args = parser.parse_args()

    # Initialize global solver with config
    global solver
    solver = PerfectSolver(args.config)

    print(f"🚀 Starting Perfect Solve HTTP MCP Server on {args.host}:{args.port}")
    print(f"📋 Vertex cap {solver.config.max_vertices}, oracle cap {solver.config.bf_cap}")
    print(f"🔗 VSCode config: {{\"servers\": {{\"perfectsolve\": {{\"type\": \"http\", \"url\": \"http://{args.host}:{args.port}\"}}}}}}")

    app.run(transport="http", host=args.host, port=args.port)


if __name__ == "__main__":
    main()
