"""Fortschrittsanzeige für längere Rasterläufe in Streamlit.

``task_spinner`` kombiniert ``st.spinner`` mit einem Fortschrittsbalken und
einer kleinen Liste der Rasterzellen (z. B. ``s = 2, m = 32``). Die
Experimentbefehle rufen nach jeder Zelle einen Callback auf, der hier auf
:meth:`TaskProgressDisplay.advance` zeigt.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence

import streamlit as st

__all__ = ["TaskProgressDisplay", "task_spinner", "grid_labels"]

# Mehr Zellen werden nicht einzeln aufgelistet, nur noch im Balken gezählt.
MAX_LISTED_TASKS = 12


@dataclass
class _TaskState:
    tasks: List[str]
    current_index: int = 0

    @property
    def completed(self) -> bool:
        return self.current_index >= len(self.tasks)

    @property
    def ratio(self) -> float:
        if not self.tasks:
            return 1.0
        return min(1.0, self.current_index / len(self.tasks))


class TaskProgressDisplay:
    """Balken plus Zellenliste; ``advance`` markiert die nächste Zelle als fertig."""

    def __init__(self, tasks: Iterable[str], progress_container, text_container) -> None:
        self._state = _TaskState(list(tasks))
        self._progress_container = progress_container
        self._text_container = text_container
        self._progress_bar = self._progress_container.progress(0.0)
        self._render()

    def _render(self) -> None:
        state = self._state
        total = len(state.tasks)
        self._progress_bar.progress(state.ratio, text=f"{min(state.current_index, total)}/{total}")
        if total > MAX_LISTED_TASKS:
            self._text_container.caption(f"{total} Rasterzellen")
            return
        lines = []
        for index, task in enumerate(state.tasks):
            if index < state.current_index:
                symbol = "✅"
            elif index == state.current_index:
                symbol = "🔄"
            else:
                symbol = "⏳"
            lines.append(f"<div style='font-size:0.75rem'>{symbol} {task}</div>")
        self._text_container.markdown("".join(lines), unsafe_allow_html=True)

    def advance(self, steps: int = 1) -> None:
        if self._state.completed:
            return
        self._state.current_index = min(len(self._state.tasks), self._state.current_index + steps)
        self._render()

    def complete(self) -> None:
        self._state.current_index = len(self._state.tasks)
        self._render()

    def cleanup(self) -> None:
        self._progress_container.empty()
        self._text_container.empty()


def grid_labels(s_values: Sequence[int], m_values: Sequence[int]) -> List[str]:
    """Beschriftungen der (s, m)-Zellen in Laufreihenfolge."""

    return [f"s = {s}, m = {m}" for s in s_values for m in m_values]


@contextmanager
def task_spinner(spinner_text: str, tasks: Iterable[str]) -> Iterator[TaskProgressDisplay]:
    """Kontextmanager; Balken und Liste verschwinden nach dem Block wieder."""

    layout_container = st.container()
    try:
        with layout_container:
            with st.spinner(spinner_text):
                display = TaskProgressDisplay(tasks, st.empty(), st.empty())
                try:
                    yield display
                finally:
                    display.complete()
                    display.cleanup()
    finally:
        layout_container.empty()
