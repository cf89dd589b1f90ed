from typing import Any, Dict, List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib import rcParams  # noqa: E402

rcParams["font.family"] = "DejaVu Sans"
rcParams["axes.unicode_minus"] = False


class ComponentChart:
    """
    Charts of component counts past the parity threshold.
    """

    @staticmethod
    def _series(rows: Sequence[Dict[str, Any]]) -> Dict[Tuple[int, int], List[Tuple[int, int]]]:
        series: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for row in rows:
            series.setdefault((row["m"], row["n"]), []).append((row["t"], row["k"]))
        return {key: sorted(points) for key, points in sorted(series.items())}

    def generate_component_chart(
        self,
        rows: Sequence[Dict[str, Any]],
        save_path: Optional[str] = None,
    ) -> plt.Figure:
        """
        Plot k against t, one line per bounds (m, n).

        Args:
            rows (Sequence[Dict]): Records with keys m, n, t, k.
            save_path (str, optional): Path to save the chart

        Returns:
            plt.Figure: Generated figure
        """
        if not rows:
            raise ValueError("No component counts to plot")

        series = self._series(rows)
        fig, ax = plt.subplots(figsize=(12, 6))

        for (m, n), points in series.items():
            ts = [t for t, _ in points]
            ks = [k for _, k in points]
            ax.plot(ts, ks, marker="o", markersize=3, linewidth=1, label=f"{m}x{n}")

        ax.set_xlabel("t", fontsize=12)
        ax.set_ylabel("components k", fontsize=12)
        ax.set_title("Components past the parity threshold", fontsize=14)
        ax.grid(True, alpha=0.3)
        if len(series) <= 30:
            ax.legend(fontsize=7, ncol=2)

        plt.tight_layout()

        if save_path:
            plt.savefig(save_path, dpi=150, bbox_inches="tight")

        return fig

    @staticmethod
    def close(fig: plt.Figure) -> None:
        plt.close(fig)
