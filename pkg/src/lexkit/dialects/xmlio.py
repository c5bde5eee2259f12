"""Safe XML parsing and deterministic serialization."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Iterator, Optional

import defusedxml
import defusedxml.ElementTree as SafeET

from lexkit.errors import DataError, FormatError
from lexkit.records import Source

XML_NS = "http://www.w3.org/XML/1998/namespace"
XML_ID = f"{{{XML_NS}}}id"
XML_LANG = f"{{{XML_NS}}}lang"


class XmlError(FormatError):
    pass


class UnknownElement(FormatError):
    def __init__(self, name: str, context: str = ""):
        self.name = name
        super().__init__(f"unexpected element <{name}>" + (f" in {context}" if context else ""))


class UnmappableValue(FormatError):
    def __init__(self, element: str, text: str):
        self.element, self.text = element, text
        super().__init__(f"<{element}> text {text!r} has no canonical value")


class InvalidContent(FormatError):
    pass


class NotExpressible(DataError):
    def __init__(self, dialect: str, detail: str):
        self.dialect, self.detail = dialect, detail
        super().__init__(f"not expressible in {dialect}: {detail}")


def parse(source: Source) -> ET.Element:
    """Parse XML bytes; DTDs and entity declarations are refused."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, str):
        source = source.encode("utf-8")
    try:
        return SafeET.fromstring(source, forbid_dtd=True)
    except ET.ParseError as exc:
        raise XmlError(f"malformed XML: {exc}") from None
    except defusedxml.DefusedXmlException as exc:
        raise XmlError(f"refused XML construct: {exc!r}") from None


def serialize(root: ET.Element) -> bytes:
    ET.indent(root, space="  ")
    body = ET.tostring(root, encoding="unicode")
    return ('<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n").encode("utf-8")


def local_name(tag: str, namespace: Optional[str] = None) -> str:
    """Strip ``namespace`` from ``tag``; any other namespace is an error."""
    if tag.startswith("{"):
        ns, _, name = tag[1:].partition("}")
        if ns != namespace:
            raise UnknownElement(tag)
        return name
    return tag


def text_of(el: ET.Element) -> str:
    """Text content of a leaf element, stripped; nested markup is refused."""
    if len(el):
        raise InvalidContent(f"<{el.tag}> must contain text only")
    return (el.text or "").strip()


def check_no_text(el: ET.Element) -> None:
    if el.text and el.text.strip():
        raise InvalidContent(f"unexpected text {el.text.strip()!r} in <{el.tag}>")
    for child in el:
        if child.tail and child.tail.strip():
            raise InvalidContent(f"unexpected text {child.tail.strip()!r} in <{el.tag}>")


def check_attributes(el: ET.Element, allowed) -> None:
    for key in el.attrib:
        if key not in allowed:
            raise InvalidContent(f"unexpected attribute {key!r} on <{el.tag}>")


def children(el: ET.Element) -> Iterator[ET.Element]:
    check_no_text(el)
    for child in el:
        if not isinstance(child.tag, str):
            continue  # comments and processing instructions
        yield child


def sub(parent: ET.Element, tag: str, attrib=None, text: Optional[str] = None) -> ET.Element:
    el = ET.SubElement(parent, tag, attrib or {})
    if text is not None:
        el.text = text
    return el
