"""
Report Generator - sweep reports, forbidden catalog files and HTML diagram pages
"""

import logging
import os
from datetime import datetime

from config.settings import CATALOG_SCHEMA, RESULTS_DIR
from utils.helpers import create_output_directory, dump_json

logger = logging.getLogger(__name__)


class ReportGenerator:
    def __init__(self, output_dir=RESULTS_DIR):
        self.output_dir = output_dir

    def write_sweep_report(self, report, output_dir=None):
        """
        Write a sweep report as JSON.

        Parameters:
        report (SweepReport): The report
        output_dir (str): Directory, defaults to the generator's results directory

        Returns:
        str: Path written
        """
        directory = output_dir or self.output_dir
        create_output_directory(directory)
        path = os.path.join(directory, f"{report.check}-n{report.n}.json")
        dump_json(report.to_dict(), path)
        logger.info("wrote %s", path)
        return path

    def write_catalog(self, catalog, output_dir=None):
        """
        Persist a forbidden catalog: one digraph JSON per member, an
        `.annotation.json` sidecar next to it, and a `catalog.json` summary.

        Returns:
        list: Paths written
        """
        directory = output_dir or os.path.join(self.output_dir, "catalog")
        create_output_directory(directory)
        paths = []
        seen = {}
        for member in catalog.members:
            stem = member.label
            seen[stem] = seen.get(stem, 0) + 1
            if seen[stem] > 1:
                stem = f"{stem}-{seen[stem]}"
            digraph_path = os.path.join(directory, f"{stem}.json")
            dump_json(member.digraph.to_json_dict(), digraph_path)
            sidecar = member.to_dict()
            del sidecar["digraph"]
            annotation_path = os.path.join(directory, f"{stem}.annotation.json")
            dump_json(sidecar, annotation_path)
            paths.extend([digraph_path, annotation_path])

        summary = {"schema": CATALOG_SCHEMA, **self.catalog_summary(catalog)}
        summary_path = os.path.join(directory, "catalog.json")
        dump_json(summary, summary_path)
        paths.append(summary_path)
        logger.info("wrote %d catalog files to %s", len(paths), directory)
        return paths

    def catalog_summary(self, catalog):
        data = catalog.to_dict()
        return {
            "max_n": data["max_n"],
            "counts": data["counts"],
            "deviations": data["deviations"],
            "labels": catalog.labels(),
            "deviation_report": catalog.deviation_report(),
        }

    def write_html(self, figures, title, output_path, caption=""):
        """
        Write a standalone HTML page embedding plotly figures.

        Parameters:
        figures (dict): Section heading -> plotly Figure
        title (str): Page title
        output_path (str): Target file

        Returns:
        str: output_path
        """
        sections = []
        for i, (name, fig) in enumerate(figures.items()):
            body = fig.to_html(full_html=False, include_plotlyjs='cdn' if i == 0 else False,
                               div_id=f"figure-{i}")
            sections.append(f"""
        <div class="section">
            <h2>{name}</h2>
            <div class="plot-container">
                {body}
            </div>
        </div>""")

        html = f"""<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>{title}</title>
    <style>
        body {{
            font-family: system-ui, sans-serif;
            margin: 0;
            background: #fafafa;
            color: #222;
        }}

        .header {{
            background: #1f3b57;
            color: #fff;
            padding: 1rem 2rem;
        }}

        .container {{
            max-width: 900px;
            margin: 2rem auto;
            padding: 0 1rem;
        }}

        .section {{
            background: white;
            padding: 1.5rem;
            margin: 1.5rem 0;
            border: 1px solid #ddd;
            border-radius: 4px;
        }}

        .section h2 {{
            margin-top: 0;
            font-size: 1.1rem;
            color: #1f3b57;
        }}
    </style>
</head>
<body>
    <div class="header">
        <h1>{title}</h1>
        <p>{caption}</p>
        <p><small>{datetime.now().strftime('%Y-%m-%d %H:%M')}</small></p>
    </div>

    <div class="container">{''.join(sections)}
    </div>
</body>
</html>"""

        directory = os.path.dirname(output_path)
        if directory:
            create_output_directory(directory)
        with open(output_path, 'w', encoding='utf-8') as f:
            f.write(html)
        return output_path
