import json

from app.core.errors import UsageError
from app.core.schema import ReportBase

OUTPUT_FORMATS = ("text", "json", "dot")


def render(response: ReportBase, output: str = "text") -> str:
    """Serialize a response; JSON keys are sorted so equal reports print identical bytes."""
    if output == "json":
        return json.dumps(response.model_dump(mode="json", by_alias=True), sort_keys=True, indent=2)
    if output == "dot":
        dot_lines = getattr(response, "dot_lines", None)
        if dot_lines is None:
            raise UsageError("--output dot is only available for the graph command")
        return "\n".join(dot_lines())
    if output == "text":
        return "\n".join(response.text_lines())
    raise UsageError(f"unknown output format {output!r}; choose one of {', '.join(OUTPUT_FORMATS)}")
