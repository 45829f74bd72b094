import type { SegmentCommand } from './api';
import { PRESETS, TeleopStore } from './store';

// Control panel: sliders in, numbers out. Every figure shown here is read
// back from a service response; the panel itself computes nothing.

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function errorText(detail: unknown): string {
  if (typeof detail === 'string') return detail;
  if (detail && typeof detail === 'object') {
    const d = detail as Record<string, unknown>;
    if (typeof d.message === 'string') return d.message;
    return JSON.stringify(detail);
  }
  return String(detail);
}

function sliderRow(
  label: string,
  input: HTMLInputElement,
  valueSpan: HTMLSpanElement,
): HTMLLabelElement {
  const row = el('label', 'control-row');
  row.append(el('span', 'control-label', label), input, valueSpan);
  return row;
}

export function buildPanel(root: HTMLElement, store: TeleopStore): void {
  const params = store.params;
  if (!params) throw new Error('panel needs params loaded first');
  const numSegments = params.params.num_segments;
  const theta2Max = store.theta2MaxDeg;

  const offlineBanner = el('div', 'banner offline', 'service unreachable, retrying...');
  offlineBanner.hidden = true;
  const errorBanner = el('div', 'banner error');
  errorBanner.hidden = true;
  root.append(offlineBanner, errorBanner);

  // per-segment direction dial + bend slider
  const controlsBox = el('section', 'controls');
  const dialInputs: HTMLInputElement[] = [];
  const bendInputs: HTMLInputElement[] = [];
  const dialValues: HTMLSpanElement[] = [];
  const bendValues: HTMLSpanElement[] = [];
  for (let i = 0; i < numSegments; i++) {
    const box = el('fieldset', 'segment');
    box.append(el('legend', undefined, `segment ${i + 1}`));

    const dial = el('input', 'dial') as HTMLInputElement;
    dial.type = 'range';
    dial.min = '0';
    dial.max = '360';
    dial.step = '1';
    dial.value = '0';
    dial.dataset.segment = String(i);
    dial.dataset.field = 'theta1_deg';
    const dialValue = el('span', 'value');
    dialInputs.push(dial);
    dialValues.push(dialValue);
    box.append(sliderRow('direction', dial, dialValue));

    const bend = el('input', 'bend') as HTMLInputElement;
    bend.type = 'range';
    bend.min = '0';
    bend.max = String(theta2Max);
    bend.step = '1';
    bend.value = '0';
    bend.dataset.segment = String(i);
    bend.dataset.field = 'theta2_deg';
    const bendValue = el('span', 'value');
    bendInputs.push(bend);
    bendValues.push(bendValue);
    box.append(sliderRow('bend', bend, bendValue));

    controlsBox.append(box);
  }
  root.append(controlsBox);

  const onSlide = (event: Event) => {
    const input = event.currentTarget as HTMLInputElement;
    store.setControl(
      Number(input.dataset.segment),
      input.dataset.field as keyof SegmentCommand,
      Number(input.value),
    );
  };
  for (const input of [...dialInputs, ...bendInputs]) {
    input.addEventListener('input', onSlide);
  }

  const presetBox = el('section', 'presets');
  for (const preset of PRESETS) {
    const btn = el('button', 'preset-btn', preset.name);
    btn.type = 'button';
    btn.addEventListener('click', () => store.applyPreset(preset));
    presetBox.append(btn);
  }
  root.append(presetBox);

  const poseBox = el('section', 'pose');
  const pending = el('div', 'pending-indicator', 'computing...');
  pending.hidden = true;
  const tipReadout = el('span', 'tip-readout', '-');
  const quatReadout = el('span', 'quat-readout', '-');
  const echo = el('div', 'echo');
  const tipRow = el('div', 'readout-row');
  tipRow.append(el('span', 'readout-label', 'tip (mm): '), tipReadout);
  const quatRow = el('div', 'readout-row');
  quatRow.append(el('span', 'readout-label', 'tip quaternion (w, x, y, z): '), quatReadout);
  poseBox.append(pending, tipRow, quatRow, echo);
  root.append(poseBox);

  const warningsBox = el('section', 'warnings');
  const saturationList = el('ul', 'saturation-list');
  warningsBox.append(saturationList);
  root.append(warningsBox);

  const motorTable = el('table', 'motors');
  motorTable.innerHTML =
    '<thead><tr><th>segment</th><th>ch0 (deg)</th><th>ch1 (deg)</th><th>ch2 (deg)</th><th>ch3 (deg)</th></tr></thead>';
  const motorBody = el('tbody');
  motorTable.append(motorBody);
  const pullTable = el('table', 'pulls');
  pullTable.innerHTML =
    '<thead><tr><th>segment</th><th>ch0 (mm)</th><th>ch1 (mm)</th><th>ch2 (mm)</th><th>ch3 (mm)</th></tr></thead>';
  const pullBody = el('tbody');
  pullTable.append(pullBody);
  const tablesBox = el('section', 'tables');
  tablesBox.append(
    el('h3', undefined, 'motor rotations'),
    motorTable,
    el('h3', undefined, 'tendon pulls'),
    pullTable,
  );
  root.append(tablesBox);

  const overlayBox = el('section', 'overlay');
  const overlayToggle = el('input', 'overlay-toggle') as HTMLInputElement;
  overlayToggle.type = 'checkbox';
  const overlayLabel = el('label');
  overlayLabel.append(overlayToggle, el('span', undefined, ' workspace cloud '));
  const cloudCount = el('span', 'cloud-count');
  overlayBox.append(overlayLabel, cloudCount);
  root.append(overlayBox);
  overlayToggle.addEventListener('change', () => {
    void store.toggleOverlay(overlayToggle.checked);
  });

  function render(): void {
    offlineBanner.hidden = !store.offline;
    if (store.rangeError) {
      errorBanner.hidden = false;
      errorBanner.textContent = `command rejected (${store.rangeError.status}): ${errorText(store.rangeError.detail)}`;
    } else {
      errorBanner.hidden = true;
      errorBanner.textContent = '';
    }
    pending.hidden = !(store.stale && !store.offline && !store.rangeError);

    for (let i = 0; i < numSegments; i++) {
      const c = store.controls[i] ?? { theta1_deg: 0, theta2_deg: 0 };
      dialInputs[i].value = String(c.theta1_deg);
      bendInputs[i].value = String(c.theta2_deg);
      dialValues[i].textContent = `${c.theta1_deg}°`;
      bendValues[i].textContent = `${c.theta2_deg}°`;
    }

    const state = store.latest;
    if (state) {
      // shown verbatim so the response round-trips to the screen
      tipReadout.textContent = `(${state.tip.position_mm.join(', ')})`;
      quatReadout.textContent = `(${state.tip.quaternion_wxyz.join(', ')})`;
      echo.textContent =
        'commanded: ' +
        state.command.segments
          .map((s, i) => `S${i + 1} θ1=${s.theta1_deg}° θ2=${s.theta2_deg}°`)
          .join('  ');

      saturationList.innerHTML = '';
      for (const w of state.saturation_warnings) {
        saturationList.append(el('li', 'saturation-note', w.message));
      }

      motorBody.innerHTML = state.motor_rotations_deg
        .map(
          (row, i) =>
            `<tr><td>${i + 1}</td>${row.map((v) => `<td>${v.toFixed(1)}</td>`).join('')}</tr>`,
        )
        .join('');
      pullBody.innerHTML = state.tendon_pulls_mm
        .map(
          (row, i) =>
            `<tr><td>${i + 1}</td>${row.map((v) => `<td>${v.toFixed(3)}</td>`).join('')}</tr>`,
        )
        .join('');
    }

    if (store.cloudLoading) {
      cloudCount.textContent = 'loading cloud...';
    } else if (store.overlayOn && store.cloud) {
      cloudCount.textContent = `${store.cloud.count} of ${store.cloud.total} reachable tips`;
    } else {
      cloudCount.textContent = '';
    }
    overlayToggle.checked = store.overlayOn;
  }

  store.subscribe(render);
  render();
}
