"""Entry point: load the configured encoder, then serve."""

import uvicorn

from .app import create_app
from .config import from_env


def main() -> None:
    settings = from_env()
    app = create_app()  # encoder load failure aborts startup here
    uvicorn.run(app, host=settings.host, port=settings.port)


if __name__ == "__main__":
    main()
