import json
from typing import List

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_ID = "macias-report/1"


class Record(BaseModel):
    """Row of a report; may hold ring elements, which dump as literals."""
    model_config = ConfigDict(arbitrary_types_allowed=True)


class ReportBase(BaseModel):
    """Common envelope of every CLI response."""
    model_config = ConfigDict(populate_by_name=True, arbitrary_types_allowed=True)

    schema_id: str = Field(default=SCHEMA_ID, alias="schema")

    def text_lines(self) -> List[str]:
        data = self.model_dump(mode="json", exclude={"schema_id"})
        lines = []
        for key, value in data.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            elif isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{key}: {value}")
        return lines

    def violation_count(self) -> int:
        return 0
