from pathlib import Path
from typing import Optional

import click
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Import route modules
from routes import cache, chartable, hurwitz, marinovafa, verify
from utils.runtime import configure_runtime


@click.group(name="cutjoin")
@click.version_option("1.0.0", prog_name="cutjoin")
@click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None, help="Character-table cache directory.")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes for sweeps.")
@click.option("--log-level", type=click.Choice(["debug", "info", "warning", "error"]), default=None, help="Logging threshold (stderr).")
@click.option("--no-disk-cache", is_flag=True, default=False, help="Keep character tables in memory only.")
def cli(cache_dir: Optional[Path], jobs: Optional[int], log_level: Optional[str], no_disk_cache: bool):
    """
    Exact cut-and-join computations for Hurwitz numbers and the Marino-Vafa formula.

    Settings come from CUTJOIN_* environment variables or a .env file; flags win.
    """
    configure_runtime(
        cache_dir=cache_dir,
        jobs=jobs,
        log_level=log_level,
        use_disk_cache=False if no_disk_cache else None,
    )


# Register commands
cli.add_command(chartable.router)
cli.add_command(hurwitz.router)
cli.add_command(marinovafa.router)
cli.add_command(verify.router)
cli.add_command(cache.router)


if __name__ == "__main__":
    cli()
