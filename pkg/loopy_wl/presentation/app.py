"""Textual explorer: generate two graphs and compare them under a refinement method."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

from textual.app import App, ComposeResult
from textual.containers import Container, Horizontal, VerticalScroll
from textual.widgets import Button, Footer, Header, Input, Label, Markdown, Select

from loopy_wl.application.services import ComparisonService, load_config
from loopy_wl.domain.generators import FamilyId, GeneratorFactory, default_generator_factory
from loopy_wl.domain.graphs import Graph
from loopy_wl.domain.refinement import MethodSpec, default_factory
from loopy_wl.shared.dto import ComparisonResult

from .cli import configure_logging

logger = logging.getLogger(__name__)

SIDES = ("left", "right")


def _parse_params(raw: str) -> Dict[str, str]:
    """``n=6 seed=3`` -> {"n": "6", "seed": "3"}."""

    params: Dict[str, str] = {}
    for token in raw.replace(",", " ").split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"Expected key=value, got {token!r}")
        params[key.strip()] = value.strip()
    return params


def render_comparison(result: ComparisonResult, g: Graph, h: Graph) -> str:
    verdict = "distinguished" if result.distinguished else "**not** distinguished"
    lines = [
        f"# {result.method}",
        f"G (n={g.n}, m={g.m}) and H (n={h.n}, m={h.m}) are {verdict} after {result.iterations} rounds.",
        "",
        "| colour | G | H |",
        "|---|---|---|",
    ]
    for color in sorted(set(result.invariant_g) | set(result.invariant_h), key=int):
        lines.append(f"| {color} | {result.invariant_g.get(color, 0)} | {result.invariant_h.get(color, 0)} |")
    return "\n".join(lines)


class ExplorerApp(App[None]):
    """Pick two generator families and a method, view the comparison."""

    CSS = """
    #controls {
        width: 40%;
        border: solid $surface-darken-2;
        padding: 1;
    }
    #results-pane {
        width: 60%;
        border: solid $primary 30%;
        padding: 1;
    }
    Label.title {
        margin-bottom: 1;
        text-style: bold;
    }
    .field-input {
        width: 100%;
        margin-bottom: 1;
    }
    #buttons {
        height: auto;
    }
    """

    BINDINGS = [
        ("escape,q", "quit", "Quit"),
        ("ctrl+s,f5", "run", "Compare"),
    ]

    def __init__(self, generators: Optional[GeneratorFactory] = None) -> None:
        super().__init__()
        self._config = load_config()
        self._generators = generators or default_generator_factory()
        self._service = ComparisonService(factory=default_factory(self._config.budget), config=self._config)

    def compose(self) -> ComposeResult:
        options = [(info.name, info.family_id.value) for info in self._generators.available_families()]
        yield Header(show_clock=True)
        with Horizontal():
            with Container(id="controls"):
                yield Label("Graphs", classes="title")
                for side, default in zip(SIDES, (FamilyId.SHRIKHANDE.value, FamilyId.ROOK.value)):
                    yield Select(options, value=default, id=f"{side}-family", allow_blank=False)
                    yield Input(placeholder="params, e.g. n=6", id=f"{side}-params", classes="field-input")
                yield Label("Method", classes="title")
                yield Input(value=f"loopy:{self._config.refinement.r}", id="method", classes="field-input")
                with Horizontal(id="buttons"):
                    yield Button("Compare", id="run-button", variant="primary")
                    yield Button("Minimal r", id="min-r-button")
            with VerticalScroll(id="results-pane"):
                self._results = Markdown("Choose two families and press **Compare**.", id="results")
                yield self._results
        yield Footer()

    def _graph(self, side: str) -> Graph:
        family = self.query_one(f"#{side}-family", Select).value
        params = _parse_params(self.query_one(f"#{side}-params", Input).value)
        graphs: List[Graph] = self._generators.generate(family, params)
        # pair families feed the left side from the first graph and the right from the last
        return graphs[-1] if side == "right" and len(graphs) > 1 else graphs[0]

    async def on_button_pressed(self, event: Button.Pressed) -> None:
        if event.button.id == "run-button":
            await self._handle_run()
        elif event.button.id == "min-r-button":
            await self._handle_minimal_r()

    async def action_run(self) -> None:
        await self._handle_run()

    async def _handle_run(self) -> None:
        try:
            g, h = self._graph("left"), self._graph("right")
            method = MethodSpec.parse(self.query_one("#method", Input).value)
            result = self._service.compare(g, h, method)
        except (ValueError, LookupError, RuntimeError) as exc:
            self._results.update(f"**Error:** {exc}")
            self.bell()
            return
        self._results.update(render_comparison(result, g, h))

    async def _handle_minimal_r(self) -> None:
        try:
            g, h = self._graph("left"), self._graph("right")
            found = self._service.minimal_r(g, h, self._config.budget.r_max)
        except (ValueError, LookupError, RuntimeError) as exc:
            self._results.update(f"**Error:** {exc}")
            self.bell()
            return
        if found is None:
            self._results.update(f"No r up to {self._config.budget.r_max} separates the two graphs.")
        else:
            self._results.update(f"Minimal distinguishing r: **{found}**")


def run_app() -> None:
    configure_logging()
    logging.getLogger("markdown_it").setLevel(logging.WARNING)
    ExplorerApp().run()


APP = "loopy_wl.presentation.app:ExplorerApp"


if __name__ == "__main__":
    run_app()
