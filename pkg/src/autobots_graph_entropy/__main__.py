# ABOUTME: Allows `python -m autobots_graph_entropy` to run the CLI.

from autobots_graph_entropy.cli.main import main

if __name__ == "__main__":
    raise SystemExit(main())
