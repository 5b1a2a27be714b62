"""HTTP client for the service, usable in-process or against a remote URL.

The CLI talks to the service through this client.  By default requests are
routed straight into the ASGI app (no socket, fully deterministic); with a
base URL they go over the network to a running server.
"""

from __future__ import annotations

import asyncio
from typing import Any

import httpx


class ServiceError(Exception):
    """A 4xx/5xx response from the service."""

    def __init__(self, status_code: int, detail: str) -> None:
        super().__init__(detail)
        self.status_code = status_code
        self.detail = detail


def _extract_detail(response: httpx.Response) -> str:
    try:
        body = response.json()
    except ValueError:
        return response.text or f"HTTP {response.status_code}"
    detail = body.get("detail", body)
    if isinstance(detail, str):
        return detail
    if isinstance(detail, list):  # pydantic validation errors
        parts = []
        for item in detail:
            loc = ".".join(str(p) for p in item.get("loc", []) if p != "body")
            parts.append(f"{loc}: {item.get('msg', '')}".strip(": "))
        return "; ".join(parts)
    return str(detail)


class ServiceClient:
    """Thin JSON-over-HTTP client; raises ServiceError on error responses."""

    def __init__(self, base_url: str | None = None) -> None:
        self._base_url = base_url
        self._transport: httpx.ASGITransport | None = None
        if base_url is None:
            from .service import create_app

            self._transport = httpx.ASGITransport(app=create_app())

    def _request(self, method: str, path: str, payload: dict[str, Any] | None) -> Any:
        if self._transport is not None:
            return asyncio.run(self._request_asgi(method, path, payload))
        with httpx.Client(base_url=self._base_url, timeout=600.0) as client:
            response = client.request(method, path, json=payload)
        return self._handle(response)

    async def _request_asgi(
        self, method: str, path: str, payload: dict[str, Any] | None
    ) -> Any:
        async with httpx.AsyncClient(
            transport=self._transport, base_url="http://service", timeout=600.0
        ) as client:
            response = await client.request(method, path, json=payload)
        return self._handle(response)

    @staticmethod
    def _handle(response: httpx.Response) -> Any:
        if response.status_code >= 400:
            raise ServiceError(response.status_code, _extract_detail(response))
        return response.json()

    def get(self, path: str) -> Any:
        return self._request("GET", path, None)

    def post(self, path: str, payload: dict[str, Any]) -> Any:
        return self._request("POST", path, payload)
