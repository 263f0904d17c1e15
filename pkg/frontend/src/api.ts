/**
 * Typed client for the /api/v1 analysis endpoints.
 *
 * The server is the single source of truth: every number shown in the UI
 * comes straight out of these response payloads.
 */

export interface VerdictRecord {
	method: string;
	polarity: string;
	score: number;
	detail: Record<string, number> | null;
}

export interface AnalyzeResponse {
	verdicts: VerdictRecord[];
	combined: VerdictRecord | null;
	elapsed_ms: number;
}

export interface MethodRecord {
	id: string;
	description: string;
	lexicon_loaded: boolean;
}

export type Strategy = 'weighted-vote' | 'cascade';

export interface AnalyzeRequest {
	text: string;
	methods?: string[];
	ensemble?: string;
	strategy?: Strategy;
}

export class ApiError extends Error {
	constructor(
		public readonly status: number,
		public readonly code: string,
		message: string,
	) {
		super(message);
		this.name = 'ApiError';
	}
}

async function raiseForStatus(response: Response): Promise<void> {
	if (response.ok) return;
	let code = 'http_error';
	let message = `request failed with status ${response.status}`;
	try {
		const body = await response.json();
		if (body && body.detail && typeof body.detail === 'object') {
			code = body.detail.code ?? code;
			message = body.detail.message ?? message;
		}
	} catch {
		// Non-JSON error body; keep the generic message.
	}
	throw new ApiError(response.status, code, message);
}

export async function fetchMethods(base = '', init?: RequestInit): Promise<MethodRecord[]> {
	const response = await fetch(`${base}/api/v1/methods`, init);
	await raiseForStatus(response);
	return (await response.json()) as MethodRecord[];
}

export async function analyze(
	request: AnalyzeRequest,
	base = '',
	init?: RequestInit,
): Promise<AnalyzeResponse> {
	const response = await fetch(`${base}/api/v1/analyze`, {
		method: 'POST',
		headers: { 'Content-Type': 'application/json' },
		body: JSON.stringify(request),
		...init,
	});
	await raiseForStatus(response);
	return (await response.json()) as AnalyzeResponse;
}
