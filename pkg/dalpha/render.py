"""Plain-text rendering of results through Jinja2 templates."""
import os

from jinja2 import Environment
from jinja2 import FileSystemLoader

from .consts import _HERE


def _fmt(value, digits: int = 10) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.{digits}f}"
    return str(value)


def _environment() -> Environment:
    loader_directories = [os.path.join(_HERE, "templates"), os.curdir]
    env = Environment(
        loader=FileSystemLoader(loader_directories),
        trim_blocks=True,
        lstrip_blocks=True,
    )
    env.filters["fmt"] = _fmt
    env.globals["zip"] = zip
    return env


_ENV = _environment()


def render(template: str, **kwargs) -> str:
    """Render ``template`` from the package templates directory.

    All keyword arguments are passed to the template.
    """
    return _ENV.get_template(template).render(**kwargs).rstrip("\n")
