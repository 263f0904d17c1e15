/**
 * DOM wiring for the comparison page.  All state lives in one
 * PlaygroundState value; at most one analyze round-trip is in flight and
 * the latest submission wins.
 */

import { analyze, ApiError, fetchMethods } from './api.js';
import type { AnalyzeResponse, MethodRecord, Strategy } from './api.js';
import {
	buildRequest,
	canSubmit,
	initialState,
	MAX_TEXT_LENGTH,
	setCompare,
	setStrategy,
	toggleMethod,
} from './playground.js';
import type { PlaygroundState } from './playground.js';
import { renderAnalysis, renderError, renderToggles } from './render.js';

const input = document.querySelector<HTMLTextAreaElement>('#text-input')!;
const submit = document.querySelector<HTMLButtonElement>('#analyze-button')!;
const results = document.querySelector<HTMLElement>('#results')!;
const toggles = document.querySelector<HTMLElement>('#method-toggles')!;
const warning = document.querySelector<HTMLElement>('#input-warning')!;
const compareBox = document.querySelector<HTMLInputElement>('#compare-strategies')!;

let state: PlaygroundState = {
	enabled: new Set(),
	available: [],
	strategy: 'weighted-vote',
	compareStrategies: false,
};
let methods: MethodRecord[] = [];
let inflight: AbortController | null = null;

function refreshControls(): void {
	toggles.innerHTML = renderToggles(methods, state);
	toggles.querySelectorAll<HTMLInputElement>('input[type=checkbox]').forEach((box) => {
		box.addEventListener('change', () => {
			state = toggleMethod(state, box.dataset.method!);
			refreshSubmit();
		});
	});
	refreshSubmit();
}

function refreshSubmit(): void {
	const check = canSubmit(state, input.value, MAX_TEXT_LENGTH);
	submit.disabled = !check.ok;
	warning.textContent = check.ok ? '' : check.reason ?? '';
}

async function runAnalysis(): Promise<void> {
	const check = canSubmit(state, input.value, MAX_TEXT_LENGTH);
	if (!check.ok) return;
	inflight?.abort();
	const controller = new AbortController();
	inflight = controller;
	results.innerHTML = '<p class="empty-state">analyzing…</p>';
	try {
		const strategies: Strategy[] = state.compareStrategies
			? ['weighted-vote', 'cascade']
			: [state.strategy];
		const responses: AnalyzeResponse[] = await Promise.all(
			strategies.map((strategy) =>
				analyze(buildRequest(state, input.value, strategy), '', {
					signal: controller.signal,
				}),
			),
		);
		if (inflight !== controller) return; // a newer submission won
		results.innerHTML = responses
			.map((response, i) =>
				renderAnalysis(response, strategies.length > 1 ? strategies[i] : undefined),
			)
			.join('\n<hr>\n');
	} catch (error) {
		if (controller.signal.aborted) return;
		if (error instanceof ApiError) {
			results.innerHTML = renderError(error.code, error.message);
		} else {
			results.innerHTML = renderError('network_error', String(error));
		}
	}
}

async function start(): Promise<void> {
	try {
		methods = await fetchMethods();
	} catch (error) {
		results.innerHTML = renderError('startup_error', String(error));
		return;
	}
	state = initialState(methods);
	refreshControls();

	input.addEventListener('input', refreshSubmit);
	submit.addEventListener('click', () => void runAnalysis());
	input.addEventListener('keydown', (event) => {
		if (event.key === 'Enter' && (event.ctrlKey || event.metaKey)) {
			void runAnalysis();
		}
	});
	document
		.querySelectorAll<HTMLInputElement>('input[name=strategy]')
		.forEach((radio) => {
			radio.addEventListener('change', () => {
				state = setStrategy(state, radio.value as Strategy);
			});
		});
	compareBox.addEventListener('change', () => {
		state = setCompare(state, compareBox.checked);
	});
}

void start();
